from .entanglement import entanglement_entropy, schmidt_entropy, wootters_concurrence

__all__ = ["entanglement_entropy", "schmidt_entropy", "wootters_concurrence"]
