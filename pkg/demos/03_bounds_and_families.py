"""Bounds separating impure from pure distance-3 stabilizer codes.

Impure distance-3 codes always admit a zero-redundancy QDS generator
choice, and zero-redundancy QDS codes obey the QDS Hamming bound
4n - k + 1 <= 2^(n-k); chaining the two yields a bound satisfied by
impure codes that pure codes can beat.  The region table below shows the
resulting envelopes; the family enumerator lists parameters where pure
codes exist but impure codes are ruled out.

Writes: bound_region.csv
"""

from qdscodes import (
    conjectured_bound,
    impure_bound,
    pure_only_families,
    quantum_hamming,
    region_table,
)

rows = region_table((19, 26))
with open("bound_region.csv", "w") as fh:
    fh.write("n,singleton_k,hamming_k,impure_k,conjecture_k\n")
    for r in rows:
        fh.write(f"{r.n},{r.singleton_k},{r.hamming_k},{r.impure_k},{r.conjecture_k}\n")
print("maximal k admitted at distance 3:")
print("  n   singleton  hamming  impure-only  conjectured")
for r in rows:
    print(f"  {r.n:<4}{r.singleton_k:<11}{r.hamming_k:<9}{r.impure_k:<13}{r.conjecture_k}")

print("\nbest-known impure [[22,15,3]]: impure bound",
      impure_bound(22, 15), "| conjectured bound", conjectured_bound(22, 15))
print("no impure [[21,15,3]] can exist: impure bound", impure_bound(21, 15),
      "while pure codes reach it: quantum Hamming", quantum_hamming(21, 15))

print("\nparameters admitting pure but not impure codes (a <= 5):")
for n, k in pure_only_families(5):
    print(f"  [[{n},{k},3]]")
