import sys
import os
import argparse

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))
from dataclasses                  import replace
from pydantic                     import ValidationError

from base_model.errors            import ConfigError, LieInvariantsError, PrimeDisagreement
from classical_lie.algebra        import build_algebra, killing_ratio
from classical_lie.algebra_spec   import AlgebraSpec
from config.setup                 import DEFAULT_BUDGETS, LOGGER, PRIMES, Budgets
from generators.descriptor        import Representation
from identities                   import default_collection
from invariant_space.verification import verify_theorem
from scripts.report               import (IDENTITY_COLUMNS, TABLE_COLUMNS, THEOREM_COLUMNS, RunConfig, emit,
                                          render)
from tensor_core.adjoint_tensor   import format_rational
from tensor_core.prime_field      import check_prime

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_ERROR = 2


def _common_arguments(suppress: bool) -> argparse.ArgumentParser:
    """
    Flags accepted both before and after the leaf command. The leaf copy uses
    SUPPRESS defaults so it never overwrites a value given at the group level.
    """
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--family", type=str, default=default(None), help="Algebra family A, B, C or D")
    parser.add_argument("--rank", type=int, default=default(None), help="Algebra rank")
    parser.add_argument("--algebras", type=str, default=default(None), help="Comma separated labels, e.g. A1,B2")
    parser.add_argument("--degree-min", type=int, default=default(1))
    parser.add_argument("--degree-max", type=int, default=default(3))
    parser.add_argument("--primes", type=str, default=default(None), help="Comma separated primes below 2^31")
    parser.add_argument("--budget-entries", type=int, default=default(None),
                        help="Cap on dense tensor entries; leaves the membership and modular caps alone")
    parser.add_argument("--budget-membership", type=int, default=default(None),
                        help="Cap on dimG^k for exact membership checks")
    parser.add_argument("--budget-modular", type=int, default=default(None),
                        help="Cap on dimG^k for the modular kernel")
    parser.add_argument("--no-epsilon-chains", action="store_true", default=default(False),
                        help="Leave out the D_r epsilon chain generators")
    parser.add_argument("--rep", choices=[rep.value for rep in Representation], default=default("defining"))
    parser.add_argument("--format", choices=["json", "csv", "text"], default=default("json"))
    parser.add_argument("--out", type=str, default=default(None), help="Output file; stdout when absent")
    parser.add_argument("--allow-long", action="store_true", default=default(False), help="Lift every budget")
    parser.add_argument("--timings", action="store_true", default=default(False),
                        help="Include timings (reports are then no longer byte-identical)")
    parser.add_argument("--seed", type=int, default=default(None), help="Seed for sampled self-tests")
    return parser


def build_parser() -> argparse.ArgumentParser:
    group_common = _common_arguments(suppress=False)
    leaf_common = _common_arguments(suppress=True)

    parser = argparse.ArgumentParser(description="Invariant tensors of the classical Lie algebras")
    groups = parser.add_subparsers(dest="group", required=True)

    algebra = groups.add_parser("algebra", parents=[group_common], help="Algebra data")
    algebra_commands = algebra.add_subparsers(dest="command", required=True)
    algebra_commands.add_parser("info", parents=[leaf_common], help="dimV, dimG, exponents, Killing ratio")

    verify = groups.add_parser("verify", parents=[group_common], help="Verifications")
    verify_commands = verify.add_subparsers(dest="command", required=True)
    verify_commands.add_parser("theorem", parents=[leaf_common], help="Generators against the invariant kernel")
    verify_commands.add_parser("identities", parents=[leaf_common], help="Every applicable identity check")

    table = groups.add_parser("table", parents=[group_common], help="Tabulations")
    table_commands = table.add_subparsers(dest="command", required=True)
    table_commands.add_parser("dims", parents=[leaf_common], help="Kernel dimensions and span ranks as CSV")
    return parser


def parse_specs(args) -> list[AlgebraSpec]:
    specs = []
    if args.algebras:
        specs.extend(AlgebraSpec.parse(label) for label in args.algebras.split(",") if label.strip())
    if args.family is not None or args.rank is not None:
        if args.family is None or args.rank is None:
            raise ConfigError("--family and --rank must be given together")
        specs.append(AlgebraSpec(args.family.upper(), args.rank))
    if not specs:
        raise ConfigError("no algebra given; use --family/--rank or --algebras")
    return specs


def parse_primes(raw: str | None) -> list[int]:
    if raw is None:
        return list(PRIMES)
    try:
        primes = [int(token) for token in raw.split(",") if token.strip()]
    except ValueError:
        raise ConfigError(f"--primes expects comma separated integers, got {raw!r}")
    if not primes:
        raise ConfigError("--primes is empty")
    return [check_prime(prime) for prime in primes]


def parse_budgets(args) -> Budgets:
    if args.allow_long:
        return Budgets.unlimited()
    overrides = {}
    for name in ("entries", "membership", "modular"):
        value = getattr(args, f"budget_{name}")
        if value is None:
            continue
        if value <= 0:
            raise ConfigError(f"--budget-{name} must be positive")
        overrides[name] = value
    return replace(DEFAULT_BUDGETS, **overrides)


def make_config(args) -> tuple[RunConfig, list[AlgebraSpec], Budgets]:
    specs = parse_specs(args)
    budgets = parse_budgets(args)
    try:
        config = RunConfig(
            algebras=[spec.label for spec in specs],
            degree_min=args.degree_min,
            degree_max=args.degree_max,
            primes=parse_primes(args.primes),
            budgets=budgets.to_dict(),
            include_epsilon_chains=not args.no_epsilon_chains,
            representation=args.rep,
            output_format=args.format,
            out=args.out,
            seed=args.seed,
        )
    except ValidationError as error:
        raise ConfigError(str(error.errors()[0]["msg"]))
    return config, specs, budgets


def cmd_algebra_info(config: RunConfig, specs: list[AlgebraSpec], budgets: Budgets) -> int:
    rows = []
    for spec in specs:
        algebra = build_algebra(spec)
        rows.append({
            "algebra": spec.label,
            "family": spec.family.value,
            "rank": spec.rank,
            "dim_v": spec.dim_v,
            "dim_g": spec.dim_g,
            "exponents": algebra.exponents,
            "killing_ratio": format_rational(killing_ratio(algebra)),
        })
    if config.output_format == "text":
        text = "".join(
            f"{row['algebra']}: dimV={row['dim_v']} dimG={row['dim_g']} exponents={row['exponents']} "
            f"killing_ratio={row['killing_ratio']}\n" for row in rows
        )
    else:
        text = render(config, rows, list(rows[0]))
    emit(text, config.out)
    return EXIT_OK


def _theorem_reports(config: RunConfig, specs: list[AlgebraSpec], budgets: Budgets, with_timings: bool):
    for spec in specs:
        algebra = build_algebra(spec)
        for k in config.degrees:
            yield verify_theorem(
                algebra, k,
                primes=config.primes,
                include_epsilon=config.include_epsilon_chains,
                rep=Representation(config.representation),
                budgets=budgets,
                with_timings=with_timings,
            )


def _report_row(report, with_timings: bool) -> dict:
    return report.model_dump() if with_timings else report.model_dump(exclude={"timings"})


def cmd_verify_theorem(config: RunConfig, specs: list[AlgebraSpec], budgets: Budgets, with_timings: bool = False) -> int:
    reports = list(_theorem_reports(config, specs, budgets, with_timings))
    rows = [_report_row(report, with_timings) for report in reports]
    emit(render(config, rows, THEOREM_COLUMNS), config.out)
    disagreements = [f"{report.label} k={report.degree}" for report in reports if not report.agreement]
    if disagreements:
        LOGGER.warning(f"[FAILED] no agreement for {', '.join(disagreements)}")
        return EXIT_FINDING
    LOGGER.info(f"[FINISHED] {len(reports)} theorem checks agree")
    return EXIT_OK


def cmd_verify_identities(config: RunConfig, specs: list[AlgebraSpec], budgets: Budgets) -> int:
    collection = default_collection(seed=config.seed, budgets=budgets)
    results = collection.run_all([build_algebra(spec) for spec in specs])
    rows = [result.model_dump() for result in results]
    emit(render(config, rows, IDENTITY_COLUMNS), config.out)
    failed = [f"{result.name} on {result.algebra}" for result in results if not result.passed]
    if failed:
        LOGGER.warning(f"[FAILED] {len(failed)} identities have a defect: {', '.join(failed)}")
        return EXIT_FINDING
    LOGGER.info(f"[FINISHED] {len(results)} identity checks passed")
    return EXIT_OK


def cmd_dimension_table(config: RunConfig, specs: list[AlgebraSpec], budgets: Budgets) -> int:
    rows = []
    for report in _theorem_reports(config, specs, budgets, with_timings=False):
        rows.append({column: getattr(report, column) for column in TABLE_COLUMNS})
    emit(render(config, rows, TABLE_COLUMNS), config.out)
    return EXIT_OK


COMMANDS = {
    ("algebra", "info"): cmd_algebra_info,
    ("verify", "theorem"): cmd_verify_theorem,
    ("verify", "identities"): cmd_verify_identities,
    ("table", "dims"): cmd_dimension_table,
}


def main(argv: list[str] | None = None) -> int:
    """
    Runs one CLI command and returns its exit code:
    0 success, 1 a mathematical finding (disagreement or defect), 2 a configuration or library error.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config, specs, budgets = make_config(args)
        command = COMMANDS[(args.group, args.command)]
        if command is cmd_verify_theorem:
            return command(config, specs, budgets, with_timings=args.timings)
        return command(config, specs, budgets)
    except PrimeDisagreement as error:
        LOGGER.error(f"[FAILED] {error}")
        return EXIT_FINDING
    except (LieInvariantsError, ValueError) as error:
        LOGGER.error(f"[ERROR] {error}")
        print(f"error: {error}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
