from dataclasses import dataclass
from importlib import metadata

__version__ = "0.1.0"

UNKNOWN_VERSION = "unknown"
TRACKED_PACKAGES = ("numpy", "scipy")


@dataclass(frozen=True)
class RuntimeMetadata:
    version: str
    numpy_version: str
    scipy_version: str


def _package_version(name: str) -> str:
    try:
        return metadata.version(name)
    except metadata.PackageNotFoundError:
        return UNKNOWN_VERSION


def get_runtime_metadata() -> RuntimeMetadata:
    numpy_version, scipy_version = (_package_version(name) for name in TRACKED_PACKAGES)
    return RuntimeMetadata(
        version=__version__,
        numpy_version=numpy_version,
        scipy_version=scipy_version,
    )


def describe_runtime() -> str:
    meta = get_runtime_metadata()
    return f"entrosense {meta.version} (numpy {meta.numpy_version}, scipy {meta.scipy_version})"
