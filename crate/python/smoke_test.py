"""Smoke test for the leafseq extension module.

Build and install with `pip install ./crates/python`, or build with
`cargo build -p leafseq-py --release --features extension-module` and put
`libleafseq_py.so` on the path as `leafseq.so`.
"""

import json
import sys

import leafseq


def main() -> int:
    assert leafseq.rc("110101") == [3, 1, 2]
    assert leafseq.rc("") == [2]
    assert leafseq.word_of([3, 1, 2]) == "110101"
    assert leafseq.pnf("00110101100") == "11010110000"
    assert leafseq.f1_profile("0110") == [0, 1, 2, 2, 2]
    assert not leafseq.is_prefix_normal("1101011011")
    assert leafseq.is_prefix_normal("1101011011", k=1)
    assert leafseq.prefix_normal_witness("1101011011") == ("11010", "11011")
    assert leafseq.leaf_equivalent("00110101100", "11010110000")

    cat = leafseq.Caterpillar.from_word("00110101100")
    assert cat.to_list() == [1, 0, 2, 1, 2, 0, 1]
    assert cat.right(12).left(8) == leafseq.Caterpillar([3, 1, 1])
    assert cat.leaf_function()[8] == 5
    left, right = cat.decompose(7)
    assert left.graft(right) == cat

    n, edges = leafseq.generate("wheel", 10)
    values = leafseq.leaf_function(n, edges)
    assert values[7] - values[6] == -3 and values[-1] is None
    assert leafseq.leaf_word(values) == "1,1,1,-3,0,0,w,w"

    assert leafseq.realize([0, 0, 2, 2, 3, 4, 4, 5, 5, 6]) == [3, 1, 2]
    n, edges = leafseq.generate("fk", 1)
    try:
        leafseq.realize(leafseq.leaf_function(n, edges))
    except ValueError as err:
        assert "11011" in str(err)
    else:
        raise AssertionError("fk_tree(1) should not be realizable")

    reports = json.loads(leafseq.verify("theorem53", 8))
    assert reports and all(not r["failures"] for r in reports)
    print("python smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
