"""A tour of the rotation algebra so(3) as an algebroid over a point.

Run from the repository root after an editable install:

    python3 demos/so3_brackets.py
"""

from algebroids.algebroid import validate
from algebroids.calculus import differential, nr_bracket, schouten
from algebroids.fixtures import so3
from algebroids.tensor import GradedTensor, Kind, wedge

A = so3()
validate(A)
print("fixture: so(3) over a point — rank", A.rank, "fibers", A.fiber_names)
print("bracket table: [e_i, e_j] = sum_k c_ij^k e_k with")
for (i, j), column in sorted(A.structure.items()):
    for k, c in sorted(column.items()):
        print(f"  c_{A.fiber_names[i]}{A.fiber_names[j]}^{A.fiber_names[k]} = {c}")

# the differential of a dual generator encodes the same structure functions
print("\nexterior derivative of each dual generator:")
for k in range(A.rank):
    print(f"  d e*{A.fiber_names[k]} = {differential(A, A.estar(k))}")

# the Schouten bracket extends the fiber bracket to multivectors
x = wedge(A.e(0), A.e(1))            # e_1∧e_2
print("\nSchouten brackets:")
print(f"  [e_1, e_1∧e_2] = {schouten(A, A.e(0), x)}")
print(f"  [e_1∧e_2, e_3] = {schouten(A, x, A.e(2))}")

# the top multivector is a casimir of the bracket: it commutes with everything
top = wedge(wedge(A.e(0), A.e(1)), A.e(2))
for probe in (A.e(0), x, top):
    assert schouten(A, top, probe).is_zero()
print("  e_1∧e_2∧e_3 Schouten-commutes with every probe tried")

# vector-valued forms: the identity endomorphism has vanishing Nijenhuis torsion
ident = GradedTensor(A, Kind.MIXED, 1, {((i,), i): 1 for i in range(A.rank)})
torsion = nr_bracket(ident, ident)
print(f"\nNijenhuis torsion of the identity endomorphism: {torsion}")
assert torsion.is_zero()
