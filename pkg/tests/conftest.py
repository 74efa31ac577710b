import random

import pytest

import bchrom as b
from bchrom.closed_forms import Family

# Family parameter ranges exercised by the acceptance suite (and the CLI
# verify contract).  Wheel n is the rim size, so wheel(10) has 11 vertices.
ACCEPTANCE_RANGES = {
    Family.PATH: range(2, 13),
    Family.CYCLE: range(3, 12),
    Family.COMPLETE: range(1, 9),
    Family.WHEEL: range(4, 11),
    Family.SUNLET: range(3, 9),
    Family.CLOSED_LADDER: range(3, 9),
}

CORPUS_SEED = 20250809
CORPUS_SIZE = 100


def make_random_corpus(seed: int = CORPUS_SEED, size: int = CORPUS_SIZE) -> list[b.Graph]:
    rng = random.Random(seed)
    out = []
    while len(out) < size:
        n = rng.randint(4, 9)
        p = rng.uniform(0.3, 0.7)
        out.append(b.random_connected_graph(n, rng, p))
    return out


def family_instance_list() -> list[tuple[Family, int, b.Graph]]:
    from bchrom.closed_forms import generate

    return [(fam, n, generate(fam, n))
            for fam, ns in ACCEPTANCE_RANGES.items() for n in ns]


@pytest.fixture(scope="session")
def random_corpus() -> list[b.Graph]:
    return make_random_corpus()


@pytest.fixture(scope="session")
def family_instances() -> list[tuple[Family, int, b.Graph]]:
    return family_instance_list()


@pytest.fixture(scope="session")
def get_report():
    """Memoised full_report, shared across the whole session."""
    cache: dict[b.Graph, b.SearchReport] = {}

    def fetch(g: b.Graph) -> b.SearchReport:
        if g not in cache:
            cache[g] = b.full_report(g)
        return cache[g]

    return fetch


@pytest.fixture(scope="session")
def get_oracle():
    """Memoised naive-enumeration results: (phi, min_col, min_stats, max_col, max_stats)."""
    cache: dict[b.Graph, tuple] = {}

    def fetch(g: b.Graph):
        if g not in cache:
            phi = b.naive_b_chromatic_number(g)
            cache[g] = (phi, *b.naive_extremal(g, phi))
        return cache[g]

    return fetch
