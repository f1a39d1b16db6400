#!/usr/bin/env python3
"""Smoke test for the eqbraid_py extension module.

Loads the cdylib straight from the cargo target directory, so a plain
`cargo build -p eqbraid-py` is the only prerequisite:

    cargo build -p eqbraid-py && python3 python/smoke_test.py
"""

import os
import sys
from importlib.machinery import ExtensionFileLoader
from importlib.util import module_from_spec, spec_from_loader
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def load_module():
    override = os.environ.get("EQBRAID_PY_LIB")
    candidates = [Path(override)] if override else [
        REPO / "target" / profile / "libeqbraid_py.so"
        for profile in ("release", "debug")
    ]
    for path in candidates:
        if path.exists():
            loader = ExtensionFileLoader("eqbraid_py", str(path))
            spec = spec_from_loader("eqbraid_py", loader)
            module = module_from_spec(spec)
            spec.loader.exec_module(module)
            return module
    sys.exit(
        "libeqbraid_py.so not found; run `cargo build -p eqbraid-py` first"
    )


def main():
    eq = load_module()

    # Words: construction, parsing, reversal, palindromicity.
    cube = eq.BraidWord(2, [1, 1, 1])
    assert eq.BraidWord.parse(2, "1 1 1") == cube
    assert str(cube) == "1 1 1"
    assert len(cube) == 3
    assert cube.reverse() == cube and cube.is_palindromic()
    twisted = eq.BraidWord.parse(4, "3 -2 1 -3 -2 3")
    assert twisted.reverse() != twisted, "not a letterwise palindrome"
    assert twisted.is_palindromic(), "but palindromic as a group element"
    assert eq.words_equal(cube.concat(cube.inverse()), eq.BraidWord(2, []))

    # The trefoil pair: closure invariants in canonical text form.
    trefoil = eq.EquivariantPair(eq.BraidWord(2, []), cube)
    assert trefoil.component_count() == 1
    assert trefoil.jones() == "1*t^1 + 1*t^3 - 1*t^4"
    assert trefoil.alexander() == "1*t^-1 - 1*t^0 + 1*t^1"
    assert len(trefoil.pd().splitlines()) == 3

    # Deloup factorization recombines to the input.
    x, block = eq.deloup_factorize(cube, len(cube))
    recombined = x.concat(block).concat(x.reverse())
    assert eq.words_equal(recombined, cube)

    # Moves preserve the closure's invariants.
    stabilized = eq.apply_move(trefoil, "stabS first +")
    assert stabilized.strands == 3
    assert stabilized.alpha.text() == "1" and stabilized.beta.text() == "2 2 2"
    assert stabilized.jones() == trefoil.jones()
    assert stabilized.alexander() == trefoil.alexander()

    # Search finds the move again and the trace replays.
    trace = eq.find_trace(trefoil, stabilized)
    assert trace == "F stabS first +\n"
    assert eq.verify_trace(trace, trefoil, stabilized)
    assert eq.find_trace(
        trefoil,
        eq.EquivariantPair(eq.BraidWord(2, []), eq.BraidWord(2, [-1, -1, -1])),
        max_nodes=200,
    ) is None

    # The bundled corpus passes every check.
    ok, report = eq.corpus_verify(str(REPO / "data" / "corpus.txt"))
    assert ok, report
    assert len(report.splitlines()) == 40

    # Domain errors surface as ValueError.
    for bad in (
        lambda: eq.BraidWord(2, [7]),
        lambda: eq.EquivariantPair(eq.BraidWord(3, [1, 2]), eq.BraidWord(3, [])),
        lambda: eq.apply_move(trefoil, "stabS second +"),
    ):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("smoke test: ok")


if __name__ == "__main__":
    main()
