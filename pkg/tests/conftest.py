from pathlib import Path

import pytest

from hypermap_codes import Hypermap, parse_cycles, random_corpus

DATA = Path(__file__).parent / "data"
TORUS8 = DATA / "torus8.hm"

# Seed shared by every corpus-driven test so failures reproduce exactly.
CORPUS_SEED = 7
CORPUS_SIZE = 500
CORPUS_MAX_DARTS = 10


@pytest.fixture(scope="session")
def torus8() -> Hypermap:
    """Genus-1 hypermap on 8 darts: 2 vertices, 2 edges, 4 faces."""
    alpha = parse_cycles("(4 3 2 1)(5 7 8 6)", 8)
    sigma = parse_cycles("(7 1 6 3)(5 2 8 4)", 8)
    return Hypermap(alpha, sigma)


@pytest.fixture(scope="session")
def corpus() -> list[Hypermap]:
    return random_corpus(CORPUS_SIZE, CORPUS_MAX_DARTS, CORPUS_SEED)
