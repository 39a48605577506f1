class LieInvariantsError(Exception):
  """Base class for every error raised by the library. The CLI maps it to exit code 2."""


class ConfigError(LieInvariantsError):
  pass


class InvalidRank(LieInvariantsError):
  pass


class ConstructionError(LieInvariantsError):
  """A freshly built algebra violates one of its own invariants."""


class NotProportional(LieInvariantsError):
  pass


class WrongFamily(LieInvariantsError):
  pass


class DegreeMismatch(LieInvariantsError):
  pass


class DimMismatch(LieInvariantsError):
  pass


class BadPrime(LieInvariantsError):
  def __init__(self, prime: int, denominator: int):
    super().__init__(f"denominator {denominator} is not invertible modulo {prime}")
    self.prime = prime
    self.denominator = denominator


class BudgetExceeded(LieInvariantsError):
  def __init__(self, what: str, needed: int, budget: int):
    super().__init__(f"{what} needs {needed} entries, budget is {budget}")
    self.what = what
    self.needed = needed
    self.budget = budget

  @classmethod
  def check(cls, what: str, needed: int, budget: int):
    if needed > budget:
      raise cls(what, needed, budget)


class PrimeDisagreement(LieInvariantsError):
  def __init__(self, what: str, values: dict[int, int]):
    detail = ", ".join(f"p={p}: {v}" for p, v in values.items())
    super().__init__(f"{what} differs between primes ({detail})")
    self.what = what
    self.values = values


class InvalidDescriptor(LieInvariantsError):
  pass
