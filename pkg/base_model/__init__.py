# base_model package
from .errors import LieInvariantsError

__all__ = ["LieInvariantsError"]
