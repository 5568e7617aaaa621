#!/usr/bin/env python
"""
Demo data generator for QueryLean.

Writes a synthetic planted-word corpus (dataset, lexicon and builtin
classifier weights) and, optionally, a validation file of N-nary query
counts over documents of varied length for ``--calibrate``.

Usage:
    python scripts/generate_demo_data.py --out input
    python scripts/generate_demo_data.py --out input --validation
"""

# Standard library
import argparse
import json
import sys
from pathlib import Path

# Third-party packages
from tqdm import tqdm

src_dir = Path(__file__).resolve().parent.parent / 'src'
sys.path.insert(0, str(src_dir))

from attack import AttackConfig, AttackContext, run_attack  # noqa: E402
from benchmark import planted_corpus  # noqa: E402
from utils import get_logger, setup_logging  # noqa: E402

logger = get_logger(__name__)

CALIBRATION_NS = (2, 3, 4, 6)
CALIBRATION_LENGTHS = (50, 100, 200, 400, 800)


def write_validation(out_dir: Path, docs_per_length: int, seed: int) -> Path:
    """
    Attack planted documents of several lengths with each candidate N.

    Returns:
        Path of ``validation.jsonl`` with one ``{"length", "n", "queries"}`` row per attack.
    """
    path = out_dir / 'validation.jsonl'
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        for offset, length in enumerate(tqdm(CALIBRATION_LENGTHS, desc='lengths')):
            corpus = planted_corpus(
                num_docs=docs_per_length, length=length, num_sentences=10, seed=seed + offset
            )
            context = AttackContext(classifier=corpus.classifier(), lexicon=corpus.lexicon())
            for n in CALIBRATION_NS:
                cfg = AttackConfig('nnary', n=n)
                for record in corpus.records:
                    result = run_attack(record.text, record.label, cfg, context)
                    if result.success:
                        row = {'length': length, 'n': n, 'queries': result.queries_total}
                        handle.write(json.dumps(row) + '\n')
    logger.info(f"Validation query counts written to {path}")
    return path


def main() -> None:
    parser = argparse.ArgumentParser(description='Generate QueryLean demo data')
    parser.add_argument('--out', default='input', help='output directory (default: input)')
    parser.add_argument('--docs', type=int, default=200, help='records in the demo dataset')
    parser.add_argument('--length', type=int, default=200, help='tokens per record')
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--validation', action='store_true', help='also write validation.jsonl')
    parser.add_argument('--validation-docs', type=int, default=20, help='documents per length for validation')
    args = parser.parse_args()

    setup_logging()
    out_dir = Path(args.out)
    paths = planted_corpus(num_docs=args.docs, length=args.length, seed=args.seed).save(out_dir)
    for name, path in paths.items():
        print(f"{name}: {path}")
    if args.validation:
        print(f"validation: {write_validation(out_dir, args.validation_docs, args.seed)}")


if __name__ == '__main__':
    main()
