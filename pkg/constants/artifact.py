ARTIFACT_NAME = "pancharatnam-deficit"
ARTIFACT_VERSION = "0.1.0"
