"""Python smoke tests for the extension module (run via ctest)."""

import os
import sys

import fibtri


def test_sequences():
    assert fibtri.fibonacci(26) == 121393
    assert fibtri.tribonacci(21) == 121415
    assert fibtri.lucas(5) == 11
    assert fibtri.fibonacci(0) == 0
    # exact big integers survive the boundary
    assert fibtri.fibonacci(300) == fibtri.fibonacci(299) + fibtri.fibonacci(298)


def test_search():
    records = fibtri.search(50, 40)
    cs = [r["c"] for r in records]
    assert cs[0] == 0
    assert {0, 1, -1, -5, -22}.issubset(set(cs))
    # c = -5 has three representations inside this range
    rec = next(r for r in records if r["c"] == -5)
    assert [(p["n"], p["m"]) for p in rec["reps"]] == [(3, 5), (6, 6), (12, 10)]
    assert all(p["F"] - p["T"] == r["c"] for r in records for p in r["reps"])


def test_continued_fraction():
    assert fibtri.cf_quotients("tau", 12) == [0, 1, 3, 1, 3, 13, 2, 1, 8, 3, 1, 5]
    c = fibtri.convergent("tau", 104)
    assert c["q"] == 669159011284129920139468279297504453112608160771671810
    assert c["p"] == 528419636478855291192208008138409657842309076397924033


def test_constants():
    consts = fibtri.constants(256)
    alpha_lo = float(consts["alpha"]["lo"])
    alpha_hi = float(consts["alpha"]["hi"])
    assert alpha_lo <= 1.6180339887498949 <= alpha_hi or abs(alpha_lo - 1.618033988749894) < 1e-12
    assert 1.839 < float(consts["alpha_T"]["lo"]) < 1.840


def test_reduce_instance():
    out = fibtri.reduce_instance(
        tau="tau", mu_expr="stage0+", A="48", B="alpha", M="8e51", convergent_index=104
    )
    assert out["status"] == "positive"
    assert float(out["eps_lo"]) > 0.068
    assert out["k_bound"] == 271


def test_errors():
    try:
        fibtri.fibonacci(100000)
    except fibtri.CertificationError:
        pass
    else:
        raise AssertionError("index out of range must raise")


def main():
    test_sequences()
    test_search()
    test_continued_fraction()
    test_constants()
    test_reduce_instance()
    test_errors()
    print("python smoke tests: all passed")


if __name__ == "__main__":
    main()
