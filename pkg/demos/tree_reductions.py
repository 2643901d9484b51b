"""Enumerate finite words, reduce a small tree, and fuzz the bound."""

import sys

from orderchains import (
    TreeGenSpec,
    chain_bound_within_horizon,
    format_nat_word,
    fuzz_reduction,
    index_of,
    iter_words,
    longest_chain,
    make_pipeline,
    reduce_tree,
    validate_tree,
    word_at,
)


def main():
    print("first twelve enumerated words:")
    for n, w in zip(range(12), iter_words()):
        print(f"  {n}: {format_nat_word(w)}")
    print("index of (1, 1, 0):", index_of((1, 1, 0)))
    print("word at 85:", format_nat_word(word_at(85)))
    print()

    # A tree is any prefix-closed finite set of words.
    tree = validate_tree(
        [(), (0,), (1,), (0, 0), (0, 1), (0, 0, 0)],
        mode="closure",
    )
    print("tree nodes:", sorted(tree.nodes, key=index_of))
    print("branch bound:", chain_bound_within_horizon(tree, horizon=200))

    pipeline = make_pipeline("subset")
    horizon = 200
    image = reduce_tree(tree, horizon)
    length, witness = longest_chain(image, pipeline.order)
    print(f"image chain length at horizon {horizon}:", length)
    print("witness positions:", list(witness.indices))
    print()

    # The image chain length brackets the in-horizon branch bound on
    # random trees; a nonzero violation count would be a bug.
    gen = TreeGenSpec(seed=11, node_cap=60)
    report = fuzz_reduction(pipeline, gen, trials=25, horizon=120)
    print(report.summary())
    report.write_csv(sys.stdout)


if __name__ == "__main__":
    main()
