"""Symbolic neighbourhoods and what they say about continuity."""
from bruckreilly.topology import (
    Schedule,
    base_at,
    check_inversion_continuity,
    check_joint_continuity,
    make_topology,
    member,
)

sched = Schedule.default(-1, 1, 2)

T = make_topology("example-2.7")
U = base_at(T, (0, 0, 0), 3)
print(U.layers)
print(member(U, (-1, 5, -1)), member(U, (-1, 2, -1)))

# upper tails are not closed under negation, so inversion breaks
T37 = make_topology("example-3.7")
print(check_inversion_continuity(T37, (0, 0, 0), sched))

# two-sided tails are, but products of them spill into every tail
T39 = make_topology("example-3.9")
print(check_inversion_continuity(T39, (0, 0, 0), sched).status)
print(check_joint_continuity(T39, (0, 0, 0), (0, 0, 0), sched))
