from pathlib import Path
from typing import List

import yaml

from toric_implicit.config import FIXTURE_DIR
from toric_implicit.core.states.job_states import JobSpec
from toric_implicit.utils.logger_config import get_logger

logger = get_logger("loaders")


class FixtureLoader:
    """Loads the bundled worked examples as jobs."""

    @staticmethod
    def available() -> List[str]:
        return sorted(p.stem for p in Path(FIXTURE_DIR).glob("*.yaml"))

    @staticmethod
    def load(name: str) -> JobSpec:
        path = Path(FIXTURE_DIR) / f"{name}.yaml"
        if not path.is_file():
            logger.warning("Fixture not found", extra={"fixture": name})
            raise FileNotFoundError(f"no fixture named {name!r}; available: {', '.join(FixtureLoader.available())}")
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
        return JobSpec.model_validate(data)
