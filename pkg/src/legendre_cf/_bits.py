"""Predicate bit layout shared by both kernel backends."""

CANON = 1 << 0         # p/q is a convergent of alpha's canonical expansion
COMP = 1 << 1          # ... of the companion expansion
EQUAL = 1 << 2
STRICT = 1 << 3
NONSTRICT = 1 << 4
LUCAS = 1 << 5
THM_A = 1 << 6         # |alpha - p/q| < 1/(2q^2)
INTERVAL = 1 << 7      # alpha in the open Farey-mediant interval of p/q
AT_MEDIANT = 1 << 8    # alpha = mediant(p/q, selected penultimate)
FATOU_DOMAIN = 1 << 9
FATOU_FOUND = 1 << 10
DUJ_DOMAIN0 = 1 << 11  # one bit per c value, up to MAX_C
DUJ_FOUND0 = 1 << 14
MAX_C = 3

# Per Farey neighbour (lower, then upper shifted by PAIR_STRIDE):
RAW0 = 1 << 17         # raw symmetric inequality for the pair
CONS_CANON0 = 1 << 18  # neighbour, p/q adjacent in canonical expansion of alpha
CONS_COMP0 = 1 << 19
CINT0 = 1 << 20        # alpha in the half-open consecutive interval
PAIR_STRIDE = 4

LAYOUT = {
    name: value
    for name, value in dict(globals()).items()
    if name.isupper() and isinstance(value, int) and name not in ("LAYOUT",)
}
