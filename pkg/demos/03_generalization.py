"""
Generalizing h(a,b) and h(b,a)
==============================

Word-fragment matching modulo AI, and the exhaustive checks for the
simple-word generalizations.
"""

from aiband import AB_PROBLEM, generalizes_pair, more_general, parse_term, verify_lemma1, verify_lemma2


def p(text):
    return parse_term(text, ai=["h"])


for r in ["?x", "h(?x,b,a,b,?x)", "h(?x,a,?x)", "h(a,?x)", "h(?x,b)"]:
    ok_left, sigma_left = more_general(p(r), AB_PROBLEM.left)
    ok_right, sigma_right = more_general(p(r), AB_PROBLEM.right)
    left = str(sigma_left) if ok_left else "-"
    right = str(sigma_right) if ok_right else "-"
    print(f"{r:18} h(a,b): {left:20} h(b,a): {right}")

print(generalizes_pair(p("h(?x,a,b,?x)")))

rep = verify_lemma1(8)
print(rep.name, rep.details, "failures:", len(rep.failures))
rep = verify_lemma2(6)
print(rep.name, "checked", rep.checked, "failures:", len(rep.failures))
