import json
from pathlib import Path
from typing import Union

import yaml
from pydantic import ValidationError

from toric_implicit.core.errors import FormatError
from toric_implicit.core.states.job_states import JobSpec


def _offset_of(data: bytes, key: str) -> int:
    return max(data.find(key.encode("utf-8")), 0)


def parse_job(data: bytes, yaml_syntax: bool = False) -> JobSpec:
    """Job description from JSON (or YAML) bytes; every failure is a FormatError with a byte offset."""
    try:
        if yaml_syntax:
            raw = yaml.safe_load(data)
        else:
            raw = json.loads(data.decode("utf-8"))
    except UnicodeDecodeError as e:
        raise FormatError(f"job file is not UTF-8: {e.reason}", e.start) from e
    except json.JSONDecodeError as e:
        raise FormatError(f"malformed JSON: {e.msg}", len(e.doc[:e.pos].encode("utf-8"))) from e
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise FormatError(f"malformed YAML: {e}", mark.index if mark is not None else 0) from e

    if not isinstance(raw, dict):
        raise FormatError("a job must be a mapping", 0)
    try:
        return JobSpec.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        loc = first["loc"]
        offset = _offset_of(data, str(loc[0])) if loc else 0
        raise FormatError(f"invalid job: {first['msg']} at {'.'.join(map(str, loc)) or '<root>'}", offset) from e


def load_job(path: Union[str, Path]) -> JobSpec:
    path = Path(path)
    with open(path, "rb") as f:
        data = f.read()
    return parse_job(data, yaml_syntax=path.suffix.lower() in (".yaml", ".yml"))
