from base_model.errors         import LieInvariantsError, WrongFamily
from base_model.identity_check import IdentityCheck, IdentityResult
from config.setup              import LOGGER


class CheckCollection:
  checks: list[IdentityCheck]
  results: list[IdentityResult]

  def __init__(self):
    self.checks = []
    self.results = []

  def add_check(self, check: IdentityCheck):
    self.checks.append(check)

  def run_generic(self):
    for check in self.checks:
      if check.applies_to(None):
        self._run_one(check, None, "generic")
    return self.results

  def run_all(self, algebras):
    """Run the generic checks once, then every applicable check on each algebra, in order."""
    self.run_generic()
    for algebra in algebras:
      for check in self.checks:
        if not check.applies_to(algebra.spec):
          continue
        self._run_one(check, algebra, algebra.label)
    return self.results

  def _run_one(self, check: IdentityCheck, algebra, label: str):
    try:
      result = check.run(algebra)
    except WrongFamily as error:
      LOGGER.info(f"[SKIPPED] {check.name} on {label}: {error}")
      return
    except LieInvariantsError as error:
      LOGGER.error(f"[ERROR] {check.name} on {label}: {error}")
      result = IdentityResult(name=check.name, algebra=label, passed=False, max_abs_defect="0",
                              details={"error": str(error)})
    tag = "[SUCCESS]" if result.passed else "[FAILED]"
    LOGGER.info(f"{tag} {result.name} on {result.algebra}: defect={result.max_abs_defect}")
    self.results.append(result)

  @property
  def all_passed(self) -> bool:
    return all(result.passed for result in self.results)
