"""
Write graph6 corpus files for the census command.

Usage:
    uv run python -m scripts.export_corpus atlas corpora/atlas7.g6 --max-order 7
    uv run python -m scripts.export_corpus atlas corpora/cubic.g6 --regular 3
    uv run python -m scripts.export_corpus trees corpora/trees10.g6 --max-order 10
"""

import argparse
import logging
from pathlib import Path

from src.ingestion.service import GRAPH6_HEADER, encode_graph6
from src.verification.corpus import ATLAS_MAX_ORDER, atlas_graphs, tree_graphs

logging.basicConfig(level=logging.INFO, format="%(asctime)s %(levelname)s %(message)s")
logger = logging.getLogger(__name__)


def export(kind: str, out: Path, min_order: int, max_order: int, regular: int | None, header: bool) -> int:
    if kind == "atlas":
        graphs = atlas_graphs(min_order, max_order, regular=regular)
    else:
        graphs = (g for g in tree_graphs(min_order, max_order) if regular is None or g.is_regular(regular))

    out.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with out.open("w") as fh:
        for g in graphs:
            fh.write(f"{GRAPH6_HEADER if header else ''}{encode_graph6(g)}\n")
            count += 1
            if count % 500 == 0:
                logger.info(f"Wrote {count} graphs")
    logger.info(f"Done. Wrote {count} graphs to {out}")
    return count


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("kind", choices=("atlas", "trees"))
    parser.add_argument("out", type=Path)
    parser.add_argument("--min-order", type=int, default=1)
    parser.add_argument("--max-order", type=int, default=ATLAS_MAX_ORDER)
    parser.add_argument("--regular", type=int, help="keep only r-regular graphs")
    parser.add_argument("--header", action="store_true", help=f"prefix every line with {GRAPH6_HEADER}")
    args = parser.parse_args()
    export(args.kind, args.out, args.min_order, args.max_order, args.regular, args.header)


if __name__ == "__main__":
    main()
