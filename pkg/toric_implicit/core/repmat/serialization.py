"""Canonical JSON form of a RepresentationMatrix.

Keys are sorted and separators compact, so equal matrices give equal bytes.
Integers that may exceed 64 bits (nu, d, cols, the prime, every entry) are
decimal strings; rational entries are always written ``num/den``.
"""
import json
import re
from fractions import Fraction
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError

from toric_implicit.core.errors import DegenerateSupport, FormatError
from toric_implicit.core.geometry.lattice import LatticePolygon
from toric_implicit.core.linalg.exact_linalg import RATIONAL, ExactMatrix, FieldSpec
from toric_implicit.core.syzygy.representation import RepresentationMatrix

_RATIONAL_ENTRY = re.compile(r"-?\d+/\d+")
_RESIDUE_ENTRY = re.compile(r"\d+")


class PrimeTag(BaseModel):
    model_config = ConfigDict(extra="forbid")

    prime: str


class MatrixPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")

    nu: str
    d: str
    cols: str
    field: Union[Literal["rational"], PrimeTag]
    polytope: Optional[List[List[int]]]
    row_basis: List[List[int]]
    coeff_matrices: List[List[List[str]]]


def _format_entry(value, field: FieldSpec) -> str:
    if field.is_rational:
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def serialize(M: RepresentationMatrix) -> bytes:
    field = M.field
    payload = {
        "nu": str(M.nu),
        "d": str(M.d),
        "cols": str(M.cols),
        "field": "rational" if field.is_rational else {"prime": str(field.prime)},
        "polytope": M.polytope.to_list() if M.polytope is not None else None,
        "row_basis": [list(p) for p in M.row_basis],
        "coeff_matrices": [[[_format_entry(v, field) for v in row] for row in m.to_rows()]
                           for m in M.coeff_matrices],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("ascii")


def _offset_of(data: bytes, needle: str) -> int:
    pos = data.find(needle.encode("utf-8"))
    return max(pos, 0)


def _parse_int(text: str, data: bytes, what: str) -> int:
    if not _RESIDUE_ENTRY.fullmatch(text):
        raise FormatError(f"{what} must be a nonnegative decimal string, got {text!r}", _offset_of(data, f'"{what}"'))
    return int(text)


def _parse_entry(text: str, field: FieldSpec, data: bytes):
    if field.is_rational:
        if not _RATIONAL_ENTRY.fullmatch(text):
            raise FormatError(f"rational entry {text!r} is not num/den", _offset_of(data, f'"{text}"'))
        num, den = text.split("/")
        if int(den) == 0:
            raise FormatError(f"entry {text!r} has a zero denominator", _offset_of(data, f'"{text}"'))
        return Fraction(int(num), int(den))
    if not _RESIDUE_ENTRY.fullmatch(text) or int(text) >= field.prime:
        raise FormatError(f"entry {text!r} is not a residue mod {field.prime}", _offset_of(data, f'"{text}"'))
    return int(text)


def deserialize(data: bytes) -> RepresentationMatrix:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise FormatError(f"payload is not UTF-8: {e.reason}", e.start) from e
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"malformed JSON: {e.msg}", len(text[:e.pos].encode("utf-8"))) from e

    try:
        payload = MatrixPayload.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        key = str(first["loc"][0]) if first["loc"] else ""
        raise FormatError(f"invalid matrix payload: {first['msg']} at {'.'.join(map(str, first['loc']))}",
                          _offset_of(data, f'"{key}"') if key else 0) from e

    if payload.field == "rational":
        field = RATIONAL
    else:
        try:
            field = FieldSpec(prime=_parse_int(payload.field.prime, data, "prime"))
        except ValidationError as e:
            raise FormatError(f"field modulus is not prime: {payload.field.prime}", _offset_of(data, '"prime"')) from e
    cols = _parse_int(payload.cols, data, "cols")
    matrices: List[ExactMatrix] = []
    for block in payload.coeff_matrices:
        if len(block) != len(payload.row_basis):
            raise FormatError(f"coefficient matrix has {len(block)} rows, row_basis has {len(payload.row_basis)}",
                              _offset_of(data, '"coeff_matrices"'))
        rows = []
        for row in block:
            if len(row) != cols:
                raise FormatError(f"row of length {len(row)}, expected {cols}", _offset_of(data, '"coeff_matrices"'))
            rows.append([_parse_entry(v, field, data) for v in row])
        matrices.append(ExactMatrix.from_rows(rows, field, cols=cols))

    try:
        polytope = LatticePolygon(vertices=payload.polytope) if payload.polytope is not None else None
        return RepresentationMatrix(
            row_basis=tuple(tuple(p) for p in payload.row_basis),
            coeff_matrices=tuple(matrices),
            nu=_parse_int(payload.nu, data, "nu"),
            d=_parse_int(payload.d, data, "d"),
            polytope=polytope,
            field=field,
        )
    except (ValidationError, ValueError, DegenerateSupport) as e:
        raise FormatError(f"inconsistent matrix payload: {e}", _offset_of(data, '"coeff_matrices"')) from e
