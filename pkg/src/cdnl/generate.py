"""Random small programs for cross-checking against the oracle."""
from __future__ import annotations

import random

ATOM_NAMES = "abcdefghijklmnop"


def random_program(rng: random.Random, max_atoms: int = 6, max_rules: int = 8,
                   constraint_prob: float = 0.1, neg_prob: float = 0.4,
                   max_body: int = 3, min_atoms: int = 1, min_rules: int = 1) -> str:
    """Program text over at most ``max_atoms`` atoms with
    ``min_rules``..``max_rules`` rules."""
    n_atoms = rng.randint(min_atoms, max_atoms)
    atoms = ATOM_NAMES[:n_atoms]
    lines = []
    for _ in range(rng.randint(min_rules, max_rules)):
        size = rng.randint(0, max_body)
        lits = []
        for a in rng.sample(atoms, min(size, n_atoms)):
            lits.append(f"not {a}" if rng.random() < neg_prob else a)
        if lits and rng.random() < constraint_prob:
            lines.append(":- " + ", ".join(lits) + ".")
            continue
        head = rng.choice(atoms)
        lines.append(f"{head} :- " + ", ".join(lits) + "." if lits else f"{head}.")
    return "\n".join(lines) + "\n"


def corpus(n: int, seed: int = 0, **kwargs) -> list[str]:
    rng = random.Random(seed)
    return [random_program(rng, **kwargs) for _ in range(n)]


def random_nogoods(rng: random.Random, min_vars: int = 6, max_vars: int = 10,
                   min_len: int = 2, max_len: int = 3) -> tuple[int, list[tuple[int, ...]]]:
    """A random constraint-mode instance: ``(num_vars, nogoods)`` with 2 to 5
    nogoods per variable. Dense short nogoods make literals with several
    antecedents common."""
    n = rng.randint(min_vars, max_vars)
    nogoods = []
    for _ in range(rng.randint(2 * n, 5 * n)):
        chosen = rng.sample(range(n), rng.randint(min_len, max_len))
        nogoods.append(tuple((v << 1) | rng.getrandbits(1) for v in chosen))
    return n, nogoods
