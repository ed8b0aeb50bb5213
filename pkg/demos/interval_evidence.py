"""From interval evidence on A to masses, then up to neutrosophic reports.

A sensor saying "A holds with confidence in [lo, hi]" is turned into masses
on A, its complement, their union and their paradoxical meet; the meet's
share maximizes the generalized entropy.  Reports of (T, I, F) triples on
several propositions are then fused with the DSm rule.
"""

import json
from pathlib import Path

from dsmt import appriou_dst, fuse_reports, interval_to_bpa
from dsmt.nfusion import report_from_dict

print(f"{'interval':>12}  {'A&~A':>6} {'A':>6} {'~A':>6} {'A|~A':>6}   classical A, ~A, A|~A")
for lo, hi in [(0.2, 0.2), (0.5, 0.5), (0.2, 0.4), (0.3, 0.9)]:
    g, c = interval_to_bpa(lo, hi), appriou_dst(lo, hi)
    print(f"{f'[{lo}, {hi}]':>12}  {g.inter:6.3f} {g.a:6.3f} {g.a_c:6.3f} {g.union:6.3f}"
          f"   {c.a:.2f} {c.a_c:.2f} {c.union:.2f}")

fixtures = Path(__file__).resolve().parent.parent / "fixtures"
r1, r2 = (report_from_dict(json.loads((fixtures / name).read_text()))
          for name in ("report_sensor1.json", "report_sensor2.json"))
fused = fuse_reports(r1, r2)
print(f"\nfused reports: {len(fused)} focal propositions, total {fused.total():.6f}")
for p, v in sorted(fused.items(), key=lambda kv: -kv[1])[:8]:
    print(f"  m({p}) = {v:.4f}")
