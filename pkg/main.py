import sys
import logging

from ktgspin import load, all_spins, settings
from ktgspin.cli import main, render_spin_table


logging.basicConfig(level=logging.INFO)


def example():
    d = load("fixtures/trefoil-chord-theta.ktg")
    certificates = all_spins(d, workers=settings.workers)
    logging.info(f"{d.name}: {len(certificates)} 条图边已判定")
    print(render_spin_table(certificates))


if __name__ == "__main__":
    if len(sys.argv) > 1:
        sys.exit(main(sys.argv[1:]))
    example()
