"""Smoke test for the python bindings: a few pinned values per entry point."""

import stylic


def main() -> None:
    assert stylic.n_tableau("4213", 4) == [[1, 2, 3, 4], [2, 4], [4]]
    assert stylic.canonical_word("4213", 4) == "4241234"
    assert stylic.schensted("4213", 4) == [[1, 3], [2], [4]]
    assert stylic.delta("4213", 4) == "424"
    assert stylic.support("4213", 4) == [1, 2, 3, 4]
    assert stylic.complement_reverse("4213", 4) == "2431"

    assert stylic.stylic_equal("212", "1212", 2)
    assert not stylic.stylic_equal("122", "212", 2)

    assert stylic.rho("1", 1) == [[0, 1], [None, 0]]
    mat = stylic.rho("4213", 4)
    assert mat[0] == [0, 1, 2, 2, 3]
    assert stylic.decode_tableau(mat, 4) == stylic.n_tableau("4213", 4)

    assert stylic.simon_equivalent("12", "21", 2, 1)
    assert not stylic.simon_equivalent("12", "21", 2, 2)
    d = stylic.distinguishing_word("122", "212", 2, 2)
    assert d == {"word": "21", "side": "rhs"}
    assert stylic.distinguishing_word("12", "12", 2, 4) is None
    assert stylic.k_spectrum("12", 2, 1) == ["e", "1", "2"]

    assert stylic.monoid_size(3) == 15
    assert stylic.is_j_trivial(3)

    assert stylic.basis(2) == ["xyxzx = xyzx", "xyxy = yxyx"]
    assert stylic.debruijn_identity(2) == "xyyxxyxyyx = xyyxyxxyyx"
    assert stylic.family_identity("r", 1) == "xyxy = xyyx"

    verdict = stylic.check_identity("xxyx = xyxx", 3)
    assert verdict["mode"] == "congruence"
    assert verdict["holds"] is False
    assert verdict["witness"] == {"word": "xxy", "side": "lhs"}
    assert stylic.check_identity("xxyx = xyxx", 2)["holds"] is True

    ev = stylic.witness_evaluation("xxyx = xyxx", 3)
    assert ev["distinguisher"] == "xxy"
    assert ev["target"] == 3
    assert ev["lhs_rows"] != ev["rhs_rows"]

    starred = stylic.check_identity("x*x = x*xx", 2)
    assert starred["mode"] == "exhaustive"
    assert starred["holds"] is True
    assert starred["evaluations"] == 5

    print("ok")


if __name__ == "__main__":
    main()
