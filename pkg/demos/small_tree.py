"""Labels and an optimal line of play on a hand-made tree."""

from jumpgames import GameSpec, Label, SampledTree, label_game, minimax

# vertex i has children CHILDREN[i]; ids are in breadth-first order
CHILDREN = [[1, 2], [3], [4, 5], [6], [], [7], [], []]


def run():
    # a complete tree: any depth cap past its height is honest
    tree = SampledTree.from_children(CHILDREN, depth_cap=2 * len(CHILDREN))
    for variant in ("normal", "misere"):
        for k in (1, 2):
            spec = GameSpec(k, variant, None)
            table = label_game(tree, spec, tree.size)
            label, rounds, line = minimax(tree, spec)
            labels = " ".join(f"{v}:{Label(table.label[v]).name[0]}" for v in range(tree.size))
            print(f"{variant:7s} k={k}  root {label.name:9s} in {rounds} rounds, line {line}  [{labels}]")


if __name__ == "__main__":
    run()
