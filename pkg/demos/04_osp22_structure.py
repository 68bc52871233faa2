"""Demo: the atypical osp(2/2) representation on the superspace.

Builds the eight generators, verifies the complete supercommutator table and
the vacuum (lowest-weight) properties, shows the superadjoint table, and
decomposes the Hamiltonian element h = K+/2 + K-/2 + K0 = (a+ + a-)^2.
Run with:  python3 demos/04_osp22_structure.py
"""

import numpy as np

from osp22 import (
    SuperVector,
    build_generator,
    default_algebra,
    hamiltonian_check,
    vacuum_checks,
    verify_structure,
)

alg = default_algebra()
N = 24

print("== supercommutator table at n_max =", N, "==")
report = verify_structure(N, alg)
listed = [r for r in report["records"] if "= 0" not in r["relation"]]
for rec in listed[:8]:
    print(f"  {rec['relation']:<28} defect {rec['max_defect']:.2e}")
print(f"  ... {len(report['records'])} relations total, all pass: {report['pass']}")
print()

print("== lowest-weight vector ==")
vac_report = vacuum_checks(12, alg)
for rec in vac_report["records"]:
    print(f"  {rec['check']:<42} defect {rec['defect']:.2e}")
print()

print("== atypicality: the one raising annihilator is W+ ==")
vac = SuperVector.basis_state(0, 0, 12, alg)
for name in ("K+", "V+", "W+"):
    img = build_generator(name, 12, alg).apply(vac)
    print(f"  |{name} vacuum| = {img.norm():.6f}")
print()

print("== superadjoints ==")
for name, expect in (("K+", "K-"), ("V+", "i W-"), ("W-", "i V+")):
    a = build_generator(name, 12, alg)
    print(f"  ({name})+ -> {expect};  involution defect "
          f"{(a.superadjoint().superadjoint() - a).max_abs():.2e}")
print()

print("== Hamiltonian element ==")
ham = hamiltonian_check(N, alg)
for rec in ham["records"]:
    print(f"  {rec['check']:<60} defect {rec['defect']:.2e}")
