from concurrent.futures import ThreadPoolExecutor
from dataclasses        import dataclass
from dotenv             import load_dotenv

import os
import logging

# load .env content before reading any knob
load_dotenv(override=False)

logging.basicConfig(
    level=os.getenv("LIE_INVARIANTS_LOG_LEVEL", "INFO").upper(), # Set the logging level
    format='%(asctime)s [%(levelname)s] - %(message)s',
    datefmt='%Y-%m-%d %H:%M:%S'
    )

LOGGER = logging.getLogger(__name__)

TOOL_VERSION = "1.0.0"
# Bumped whenever the basis order or the bilinear form conventions change
BASIS_CONVENTION = "split-form-lex-v1"

# Two fixed 31-bit primes, plus one used only when they disagree
DEFAULT_PRIMES = (2147483647, 2147483629)
ESCALATION_PRIME = 2147483587


def _parse_primes(raw: str | None) -> tuple[int, ...]:
  if not raw:
    return DEFAULT_PRIMES
  try:
    primes = tuple(int(token) for token in raw.split(",") if token.strip())
  except ValueError:
    LOGGER.warning(f"[SKIPPED] LIE_INVARIANTS_PRIMES={raw!r} is not a comma separated integer list, using defaults")
    return DEFAULT_PRIMES
  return primes or DEFAULT_PRIMES


PRIMES = _parse_primes(os.getenv("LIE_INVARIANTS_PRIMES"))
BUDGET_ENTRIES = int(os.getenv("LIE_INVARIANTS_BUDGET_ENTRIES", str(2 ** 27)))
MAX_WORKERS = int(os.getenv("LIE_INVARIANTS_WORKERS", "4"))


@dataclass(frozen=True)
class Budgets:
  """
  Size caps guarding memory and runtime.

  entries: dense entries of any single tensor or matrix chain
  membership: dimG^k allowed for exact membership evaluation
  modular: dimG^k allowed for modular kernel computations
  symmetric_degree: highest degree the exponent oracle may reach
  """
  entries: int = BUDGET_ENTRIES
  membership: int = 2 ** 22
  modular: int = 2 ** 24
  symmetric_degree: int = 12

  def __post_init__(self):
    for name in ("entries", "membership", "modular", "symmetric_degree"):
      if getattr(self, name) <= 0:
        raise ValueError(f"budget {name} must be positive")

  @classmethod
  def uniform(cls, entries: int) -> "Budgets":
    return cls(entries=entries, membership=entries, modular=entries)

  @classmethod
  def unlimited(cls) -> "Budgets":
    big = 2 ** 62
    return cls(entries=big, membership=big, modular=big, symmetric_degree=64)

  def to_dict(self) -> dict:
    return {
      "entries": self.entries,
      "membership": self.membership,
      "modular": self.modular,
      "symmetric_degree": self.symmetric_degree,
    }


DEFAULT_BUDGETS = Budgets()


def make_executor(max_workers: int | None = None) -> ThreadPoolExecutor:
  return ThreadPoolExecutor(max_workers=max_workers or MAX_WORKERS)
