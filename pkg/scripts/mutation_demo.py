"""Show that a single wrong coefficient in an input series is caught.

Perturbs x(q) by c q^e and reruns the checks that consume x.
"""
import argparse
from fractions import Fraction

from septic_qseries import identities
from septic_qseries.identities import Perturbation


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--exponent", type=Fraction, default=Fraction(7))
    p.add_argument("--coefficient", type=Fraction, default=Fraction(1))
    p.add_argument("--target", default="x")
    args = p.parse_args()
    pert = Perturbation(args.exponent, args.coefficient, target=args.target)
    for r in identities.run(["septic", "products.theta-x"], order=20, perturbation=pert):
        where = "" if r.first_failure is None else f"  first nonzero at q^{r.first_failure[0]}: {r.first_failure[1]}"
        print(f"{r.name:<34} {r.status}{where}")


if __name__ == "__main__":
    main()
