"""Two sources that almost completely disagree.

Dempster's rule renormalizes the conflict away and ends up certain of the
one hypothesis both sources thought unlikely.  The DSm rule keeps the
conflict on the intersections instead.

    python3 demos/conflict_handling.py
"""

from dsmt import Frame, PowerSet, belief, dempster_combine, dsm_combine, make_granule

frame = Frame(("M", "C", "T"))  # meningitis, concussion, tumor
doctor1 = make_granule(frame, {"M": 0.99, "T": 0.01}, PowerSet)
doctor2 = make_granule(frame, {"C": 0.99, "T": 0.01}, PowerSet)

fused, report = dempster_combine(doctor1, doctor2)
print("Dempster")
for p, v in fused.items():
    print(f"  m({p}) = {v:.4f}")
print(f"  K = {report.K:.4g}, weight of conflict = {report.weight_of_conflict:.3f}")

paradox = dsm_combine(doctor1, doctor2)
print("\nDSm")
for p, v in sorted(paradox.items(), key=lambda kv: -kv[1]):
    print(f"  m({p}) = {v:.4f}")
for label in frame.labels:
    print(f"  Bel({label}) = {belief(paradox, frame.prop(label)):.4f}")
