"""Smoke test for the pascal_adic_py extension module."""

import pascal_adic_py as pa


def main():
    assert pa.supporting_word(2, 2) == "110100"
    assert "".join(map(str, pa.exotic_sequence(14))) == "01001101001000"

    x = pa.DyadicWord("00011110:0*")
    assert x.jump() == 15
    y = x
    for _ in range(35):
        y = y.successor()
    assert str(y) == "00001111:0*"
    assert y.predecessor().successor() == y

    assert list(pa.DyadicWord.from_int(10, 8).encode(-3, 2)) == [1, 0, 1, 0, 0, 1]
    assert pa.DyadicWord("110:0*").pair_coords(1) == [(0, 1)]

    try:
        pa.DyadicWord("0011:1*").successor()
    except pa.PascalAdicError as e:
        assert "Boundary" in str(e)
    else:
        raise AssertionError("expected Boundary")

    rows, residual = pa.cylinder_table(6)
    assert len(rows) == 37 and residual == (0, 0)
    total = sum(num / 2**exp for _, num, exp, _ in rows)
    assert abs(total - 1.0) < 1e-12

    assert pa.complexity(10)[5:] == [37, 56, 80, 112, 150]
    assert pa.hamming_density([0, 1, 1, 0], [0, 0, 1, 1]) == (1, 2)
    length, word, num, den = pa.periodic_scan(pa.morse_sequence(1 << 12), 8)
    assert 0 < num / den < 0.5 and len(word) == length

    avs = pa.averaged_metric("pascal", 4, 256, seed=3)
    assert len(avs) == 4 and all(0 <= a <= 1 for a in avs)
    assert avs == pa.averaged_metric("pascal", 4, 256, seed=3)
    print("smoke test ok")


if __name__ == "__main__":
    main()
