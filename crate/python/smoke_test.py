"""Smoke test for the compiled extension.

Build and install first:  pip install --no-build-isolation ./crates/py
"""

import json

import hochschild_py as h


def main() -> None:
    assert h.hh_dims("q", 7) == [5, 3, 3, 4, 5, 5, 5, 6]
    assert h.hh_dims("f3", 7, "oracle") == [5, 3, 3, 4, 5, 5, 5, 6]

    table = json.loads(h.hh_table("f2", 5))
    status = {row["n"]: row["status"] for row in table["rows"]}
    assert status[1] == "match" and status[2] == status[3] == status[5] == "unstated"

    report = json.loads(h.verify("f2", 12, "both"))
    assert report["passed"], [c for c in report["checks"] if not c["ok"]]

    assert h.center("q") == ["e1 + e2", "eps", "eps^2", "alpha*beta + beta*alpha", "beta*alpha*beta*alpha"]
    assert dict(h.gsz(2))["g^1_2"] == "eps^2 - alpha*beta*alpha*beta"

    homdims = json.loads(h.homdims_table("q", 3))
    assert [r["value"] for r in homdims["rows"] if r["quantity"] == "Hom(R_n,A)"] == [7, 8, 8, 11]

    try:
        h.hh_dims("f4", 3)
    except ValueError as e:
        assert "not prime" in str(e)
    else:
        raise AssertionError("f4 accepted")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
