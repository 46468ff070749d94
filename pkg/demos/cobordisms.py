"""Composing thin flat surfaces from generator words."""

from thinflat import cobordism as cb
from thinflat.parser import elaborate, format_cobordism

for word in ("iota ; b1 ; eps", "delta ; mu", "delta ; perm ; mu", "b3 ; b3", "b1 ; b3", "eps ; iota"):
    print(f"{word:22} -> {format_cobordism(elaborate(word))}")

# the interval object is not a commutative Frobenius object
print("m.delta == m.P.delta ?", elaborate("delta ; mu") == elaborate("delta ; perm ; mu"))

# closing an endomorphism glues its top to its bottom
for word in ("id(2)", "b2", "b3"):
    print(f"close_up({word}) =", cb.close_up(elaborate(word)))
