"""Running identity suites programmatically, and what a failure looks like.

Run from the repository root after an editable install:

    python3 demos/suite_and_witness.py
"""

from algebroids.algebroid import validate
from algebroids.errors import AnchorNotMorphism
from algebroids.fixtures import broken_anchor
from algebroids.suites import SUITE_NAMES, run_suite

# every named suite the CLI exposes
print(len(SUITE_NAMES), "suites:", ", ".join(SUITE_NAMES[:6]), "...")

# run one: each item records what it checked and how many instances
result = run_suite("theorem-1", seed=7, trials=20)
print(f"\n{result['suite']}: {result['title']}")
for item in result["items"]:
    print(f"  [{item['status']}] {item['id']:<16} checked {item['checked']:>4}"
          f"  — {item['label']}")
print("overall:", result["status"])

# a designed-broken algebroid: validation refuses it and hands back a witness
# small enough to recheck by hand
try:
    validate(broken_anchor())
except AnchorNotMorphism as err:
    print("\nbroken fixture rejected:", err)
    for field, value in err.witness.items():
        print(f"  witness {field}: {value}")

# suite failures carry the same shape of witness: a loadable mini-model, a
# rational point, and the residual values at that point, plus a replay recipe
# through `algebroids eval`.  (All shipped suites pass, so none to show here;
# tests/test_suites.py forges a failure and replays its witness end to end.)
