# end-to-end CLI pipeline, driven from python so it works anywhere
# generate -> verify -> transform -> verify -> tile -> color -> render

import pathlib

from quasisym.cli import cli_run

out = pathlib.Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
q8 = out / "q8.json"
hexa = out / "hex.json"
hex2 = out / "hex_squared.json"
til = out / "hex_tiling.json"
colored = out / "hex_colored.json"
svg = out / "hex.svg"

steps = [
    ["generate", "--kind", "quasilattice", "--n", "8", "--bound", "1",
     "--radius", "6", "-o", str(q8)],
    ["verify", "--suite", "self-similarity", "--input", str(q8)],
    ["verify", "--suite", "rotation-order", "--input", str(q8), "--expect", "8"],
    ["generate", "--kind", "hexagonal", "--radius", "3.0", "-o", str(hexa)],
    ["transform", "--map", "square", "--input", str(hexa), "-o", str(hex2)],
    ["verify", "--suite", "rotation-order", "--input", str(hex2), "--expect", "3"],
    ["tile", "--input", str(hexa), "--sectors", "6", "-o", str(til)],
    ["color", "--input", str(til), "--scheme", "two_checker", "-o", str(colored)],
    ["render", "--input", str(hexa), "--tiling", str(colored), "--rays",
     "-o", str(svg)],
]

for argv in steps:
    print("\n$ quasisym " + " ".join(argv))
    code = cli_run(argv)
    if code != 0:
        raise SystemExit(f"step failed with exit code {code}")

print("\nall steps exited 0; outputs in", out)
