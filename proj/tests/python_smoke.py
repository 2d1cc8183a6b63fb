"""Smoke test for the pybind11 module; run with the module on PYTHONPATH."""

import _bracketword as bw

FIB = "10101101011011010110101101101011011010110101101101011010"

S = bw.Session()
assert S.eval("floor(phi*n)", 4) == "6"
assert S.eval("floor(phi*n)", -4) == "-7"
assert S.parse("floor(phi*n) - 2*frac(1/2*n^2)") == "floor(phi*n) - 2*frac(1/2*n*n)"
assert S.height("floor(frac(n)*n)") == 2
assert S.constant("1/2*sqrt(5) - 1/2") == "1/2*theta - 1/2"

w = S.word("fib_sturmian")
assert w.prefix(56) == FIB
assert w[0] == "1" and w[1] == "0"
assert w.symbols(4) == ["1", "0", "1", "0"]

inline = S.word("sturmian(sqrt(2) - 1, 1/3, floor)")
assert inline.prefix(5) == "10100"

S.declare("word evens = subseq(fib_sturmian; 2*n)")
assert S.word("evens").prefix(3) == FIB[0] + FIB[2] + FIB[4]

assert bw.complexity(w, [1, 2, 3], 2000) == [(1, 2), (2, 3), (3, 4)]
rows = bw.frequency(w, ["1"], [1000], 5000)
assert len(rows) == 1 and abs(rows[0][3] - 0.618) < 0.01
marker, value = bw.recurrence(w, ["1", "0", "1"], 2000)
assert not marker and value == 6
counts = bw.counting(S.word("fib_set"), "1", [10, 100], 1000)
assert [(N, c) for N, c, _ in counts] == [(10, 6), (100, 11)]
assert bw.balance(w, "1", 16, 2000) == 1

assert bw.pisot_member(1, 1, "21")
assert not bw.pisot_member(1, 1, "40")
assert bw.pisot_traces(1, 1, 9) == [3, 1, 3, 7, 11, 21, 39, 71, 131]

cert = bw.lattice_approx(S, ["1", "1"], "1/2", 2)
assert cert["rank"] == 1 and cert["basis"] == [[1, -1]]
assert cert["inclusion_exact"] and cert["c_hat"] == "0"

cuts, bound, within = bw.halfspace_cuts([[0, 0], [1, 1], [2, 2]])
assert len(cuts) == 6 and bound == 8 and within

ok, name, detail = bw.run_criterion(1)
assert ok and name

try:
    S.word("nothere")
except bw.Error as e:
    assert "Usage" in str(e)
else:
    raise AssertionError("expected bw.Error")

print("python smoke ok")
