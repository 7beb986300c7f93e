import pytest

from orbieuler.group_core import build_group, generated_subgroup
from orbieuler.gspace import coset_gset, disjoint_union, natural_gset, regular_gset, trivial_gset

CORPUS_GROUPS = ["Z_2", "Z_3", "Z_4", "Z_2xZ_2", "Z_6", "S_3", "D_4", "Q_8"]


def coset_space(G):
    """G/H for the subgroup generated by the first element of prime order (G itself if none is proper)."""
    for g in range(G.order):
        H = generated_subgroup(G, [g])
        if 1 < H.order < G.order:
            return coset_gset(G, H)
    return coset_gset(G, G.whole)


def corpus_spaces(name):
    G = build_group(name)
    spaces = {
        "regular": regular_gset(G),
        "trivial2": trivial_gset(G, 2),
        "cosets": coset_space(G),
    }
    if hasattr(G, "degree"):
        spaces["natural"] = natural_gset(G)
    spaces["mixed"] = disjoint_union(trivial_gset(G, 1), coset_space(G))
    return G, spaces


def corpus():
    out = []
    for name in CORPUS_GROUPS:
        G, spaces = corpus_spaces(name)
        for label, X in spaces.items():
            out.append((name, label, X))
    return out


@pytest.fixture(scope="session")
def z2():
    return build_group("Z_2")


@pytest.fixture(scope="session")
def s3():
    return build_group("S_3")


ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, title = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title}")
