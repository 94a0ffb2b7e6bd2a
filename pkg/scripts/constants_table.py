"""Print the septic constants, closed form against sine transform, and the derived tables."""
from septic_qseries.report import constants_table, constants_text

if __name__ == "__main__":
    table = constants_table()
    print(constants_text(table))
    raise SystemExit(0 if all(r["match"] for r in table["efund"]) else 1)
