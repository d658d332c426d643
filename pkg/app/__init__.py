from constants.artifact import ARTIFACT_VERSION as __version__

__all__ = ["__version__"]
