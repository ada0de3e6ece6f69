"""
Verifying a scenario on projective space
========================================

A scenario lists charts ``(f, v)`` and the singular points.  The report
compares the sums of local indices with the global totals, and flags a
missing point through the Baum-Bott count.
"""

from importlib import resources

from foliation_indices import load_scenario, run_scenario

fixtures = resources.files("foliation_indices") / "fixtures"

report = run_scenario(load_scenario(fixtures / "p2_diagonal_line.scn"))
print(report.to_table())

# Leaving out the point off the line breaks the Baum-Bott and residue totals
omitted = run_scenario(load_scenario(fixtures / "p2_diagonal_line_omitted.scn"))
print("failures:", omitted.failures, omitted.verdicts["baum_bott_sum"].detail)

# Deterministic structured output
print(run_scenario(load_scenario(fixtures / "fermat_cone_k3.scn")).to_json()[:400])
