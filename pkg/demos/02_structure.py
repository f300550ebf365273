"""Idempotents, Green's relations and inverses on a finite window."""
from bruckreilly.recipes import build_semigroup
from bruckreilly.structure import Window, check_I_bisimple, greens, idempotents_ext, inverse_counts

w = Window(build_semigroup("zbr", "semilattice2"), -1, 1)
print(len(idempotents_ext(w)), "idempotents")
# one D-class per D-class of the carrier
print(len(greens(w, "D").classes), "D-classes on the window")

# a carrier that is regular but not inverse: some elements get two inverses
lz = Window(build_semigroup("zbr", "leftzero2+1"), -1, 1)
doubles = {x: ys for x, ys in inverse_counts(lz).items() if len(ys) > 1}
print(len(doubles), "elements with two inverses, e.g.")
for x, ys in sorted(doubles.items())[:3]:
    print(x, "->", ys)

# over a group the idempotents form a chain ordered against the index
print(check_I_bisimple(Window(build_semigroup("warne", "c6", "scale(2)", {-1: 1}), -2, 2)).witness)
