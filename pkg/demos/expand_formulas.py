"""Build and render the closed-form expansions of d^n y/dx^n.

For y(x) defined implicitly by F(x, y) = 0 (with F_y != 0), each derivative
of y is a finite sum over two-dimensional partitions: the order-n expansion
has one term per partition whose first coordinates sum to n, whose second
coordinates sum to one less than the number of parts, and which avoids the
part (0, 1).  Run this script to see the expansions grow.
"""

from implicit_deriv import build_formula, render, required_derivatives

# the first well-known case: dy/dx = -F_x / F_y
print("n=1:", render(build_formula(1), "text"))

# the classical second derivative, three terms
print("n=2:", render(build_formula(2), "text"))

# from here the term count grows quickly: 9, 24, 61, ...
for n in (3, 4):
    formula = build_formula(n)
    print(f"\nn={n} has {len(formula.terms)} terms:")
    print(" ", render(formula, "text"))

# every term is a product of mixed partials F_(i,j); this is the full list
# of partials a numeric evaluation of the order-4 expansion touches
print("\npartials read at n=4:", sorted(required_derivatives(4)))

# the same data is available as LaTeX or as a stable JSON document
print("\nLaTeX at n=2:", render(build_formula(2), "latex"))
print("\nJSON at n=2:", render(build_formula(2), "json"))
