"""Five equivalent forms of the WLP evaluated side by side on mixed exponents."""

from wlpci.lefschetz import E, equivalence_suite, mgd_syzbar

for p, a in [(2, (2, 3, 4)), (3, (2, 2, 3, 3)), (5, (2, 3, 4)), (3, (3, 3, 3, 3))]:
    rep = equivalence_suite(p, len(a), a)
    flags = "".join("T" if c else "F" for c in rep.conditions)
    syz = mgd_syzbar(p, len(a), a)
    print(f"p={p} a={a}: conditions {flags}, mgd Syz-bar {syz.value}, E {E(len(a), a)}")
    if syz.witness is not None:
        print("   lowest non-Koszul relation:", syz.witness.format())
