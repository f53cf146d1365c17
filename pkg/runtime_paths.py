import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path


RUNTIME_ROOT_ENV = "ENTROSENSE_HOME"
DEFAULT_RUNTIME_ROOT = Path.home() / ".entrosense"


@dataclass(frozen=True)
class RuntimePaths:
    root: Path
    logs_dir: Path


def build_runtime_paths(root: Path) -> RuntimePaths:
    return RuntimePaths(root=root, logs_dir=root / "logs")


@lru_cache(maxsize=1)
def resolve_runtime_paths() -> RuntimePaths:
    override = (os.getenv(RUNTIME_ROOT_ENV) or "").strip()
    root = Path(override).expanduser() if override else DEFAULT_RUNTIME_ROOT
    return build_runtime_paths(root)
