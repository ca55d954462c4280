"""
Plain-text renderers for the CLI reports.
"""
from typing import List

from toric_implicit.core.states.job_states import AnalyzeReport, VerifyReport


def render_analyze_report(report: AnalyzeReport) -> str:
    """
    Summarize the Newton data and the sizes predicted for the chosen embedding.

    Args:
        report: Output of the analyze pipeline

    Returns:
        Multi-line text, one quantity per line
    """
    lines = [
        f"N(f):        {report.N}",
        f"translation: {report.translation}",
        f"homothety d: {report.newton_d}",
        f"N'(f):       {report.Nprime}",
        "",
        f"embedding:   {report.embedding}",
        f"Q:           {report.Q}",
        f"d:           {report.d}",
        f"alpha(Q):    {report.alpha}",
        f"nu0 = 2d - alpha: {report.nu0}",
        f"|basis(nu0)|:     {report.basis_nu0}",
        f"|basis(nu0 + d)|: {report.basis_nu0_plus_d}",
    ]
    if report.nu != report.nu0:
        lines += [
            f"nu (override): {report.nu}",
            f"|basis(nu)|:      {report.basis_nu}",
            f"|basis(nu + d)|:  {report.basis_nu_plus_d}",
        ]
    lines += [
        f"predicted rows:  {report.predicted_rows}",
        f"normalized area of N(f): {report.normalized_area}",
    ]
    return "\n".join(lines)


def render_verify_report(report: VerifyReport) -> str:
    title = report.job or "job"
    lines: List[str] = [
        f"{title}: nu={report.nu}, M is {report.shape[0]}x{report.shape[1]}",
        "",
    ]
    for check in report.checks:
        mark = "PASS" if check.passed else "FAIL"
        lines.append(f"[{mark}] {check.name}" + (f" ({check.detail})" if check.detail else ""))
    lines += ["", f"{report.passed} passed, {report.failed} failed"]
    return "\n".join(lines)
