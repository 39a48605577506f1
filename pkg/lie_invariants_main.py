import sys

from scripts.cli import main


if __name__ == "__main__":
    """
    How to run:
    python lie_invariants_main.py <group> <command> [flags]

    ex:
    python lie_invariants_main.py algebra info --family B --rank 2
    python lie_invariants_main.py verify theorem --family A --rank 1 --degree-max 4
    python lie_invariants_main.py verify theorem --family D --rank 3 --degree-min 3 --degree-max 3 --no-epsilon-chains
    python lie_invariants_main.py verify identities --algebras A1,C2,D3 --out data/identities.json
    python lie_invariants_main.py table dims --algebras A1,B2 --degree-max 3 --format csv

    Exit codes: 0 ok, 1 disagreement or identity defect, 2 configuration or budget error.
    """
    sys.exit(main())
