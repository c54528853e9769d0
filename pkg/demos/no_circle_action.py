"""
Searching for a Duistermaat-Heckman function
============================================

A circle action on the regular pentagon space would come with a concave
piecewise-linear DH function enclosing RR = 6 lattice points. List every
candidate, apply the isolated-fixed-point slope rule, and then loosen
each hypothesis in turn to see that it matters.
"""

from pentaspace import DHConstraints, enumerate_dh, karshon_filter, verify_no_circle_action

pre = enumerate_dh(DHConstraints(6, 3))
print("candidates:", [p.values for p in pre])
print("after slope rule:", [p.values for p in karshon_filter(pre)])

report = verify_no_circle_action()
print("euler", report.euler, "> rr 6, so not toric:", report.non_toric)
print("no circle action:", report.passed)

# with RR = 7 or with only two critical values something survives
for target, crit in ((7, 3), (6, 2)):
    r = verify_no_circle_action(target=target, min_critical=crit, strict=False)
    print(target, crit, [p.values for p in r.post_filter], r.notes)
