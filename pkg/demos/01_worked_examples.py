"""Walk through the three classic small systems.

Run:  python demos/01_worked_examples.py
"""

from quadratize import bnb_search, parse_system, render_result

# --- a scalar power ----------------------------------------------------------
#
# x' = x^5 has degree five.  Introducing y = x^4 gives x' = x*y and
# y' = 4*x^3*x' = 4*x^8 = 4*y^2: both right-hand sides are quadratic, and one
# new variable is clearly the minimum since the system is not quadratic as is.

system = parse_system("x' = x^5")
result, stats = bnb_search(system)
print("=== x' = x^5 ===")
print(render_result(result.document))
print(f"search visited {stats.nodes_visited} nodes\n")

# --- an optimum that escapes the obvious candidate set -----------------------
#
# For x1' = x2^4, x2' = x1^2 every monomial of the system has x1-degree at
# most 2, yet the unique optimal quadratization needs x1^3: the variables are
# x1*x2^2, x2^3, x1^3.  Restricting candidates to the system's own degree box
# would miss it, which is why the solver searches factorizations instead.

system = parse_system("x1' = x2^4\nx2' = x1^2")
result, stats = bnb_search(system)
print("=== x1' = x2^4, x2' = x1^2 ===")
print(render_result(result.document))
print(f"search visited {stats.nodes_visited} nodes\n")

# --- symbolic parameters ------------------------------------------------------
#
# The Rabinovich-Fabrikant equations carry two symbolic constants a and b.
# Parameters stay inside coefficients (they are never candidate variables),
# and exact rational/symbolic arithmetic keeps cancellation reliable.
# Three new variables suffice: x^2, x*y, y^2.

system = parse_system(
    "x' = y*(z - 1 + x^2) + a*x\n"
    "y' = x*(3*z + 1 - x^2) + a*y\n"
    "z' = -2*z*(b + x*y)\n"
)
result, stats = bnb_search(system)
print("=== Rabinovich-Fabrikant ===")
print(render_result(result.document))
print(f"search visited {stats.nodes_visited} nodes")
