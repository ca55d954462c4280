from toric_implicit.core.states.job_states import AnalyzeReport, CheckResult, ExpectedResults, JobSpec, VerifyReport

__all__ = ["AnalyzeReport", "CheckResult", "ExpectedResults", "JobSpec", "VerifyReport"]
