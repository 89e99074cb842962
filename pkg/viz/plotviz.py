"""Render sweep CSV files into figure images.

Standalone offline renderer for the fixed-schema CSV emitted by the dceqi
sweep CLI.  It never computes physics: every plotted number comes from the
input file.

    plotviz <fig1|fig2|fig3> <input.csv> <output.{svg,png}>

fig1 and fig2 draw the perturbative interferometric power (solid) and the
A->B steering (dashed) against the swept column; fig3 draws a heatmap of
steering over the (n_th, f) grid.  Output is written atomically (temp file
plus rename) and SVG output is byte-stable across runs.
"""

import argparse
import csv
import os
import sys

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "plotviz"  # stable ids in SVG output

import matplotlib.pyplot as plt

EXPECTED_COLUMNS = [
    "epsilon",
    "temperature_K",
    "n_th",
    "f",
    "steering_ab",
    "steering_ba",
    "steering_pert",
    "ip_a",
    "ip_b",
    "ip_pert",
    "log_neg",
    "physicality_deficit",
    "flags",
]

FIGURE_KINDS = ("fig1", "fig2", "fig3")

X_COLUMN = {"fig1": "epsilon", "fig2": "n_th"}
X_LABEL = {"fig1": "drive amplitude", "fig2": "thermal photons per mode"}


class RenderError(Exception):
    pass


def load_csv(path):
    """Read and validate the CSV; returns the data rows as string lists."""
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise RenderError(f"{path}: file is empty") from None
            rows = list(reader)
    except OSError as exc:
        raise RenderError(f"cannot read {path}: {exc}") from exc
    if header != EXPECTED_COLUMNS:
        missing = [name for name in EXPECTED_COLUMNS if name not in header]
        if missing:
            raise RenderError(f"{path}: missing column(s): {', '.join(missing)}")
        raise RenderError(f"{path}: header does not match the sweep CSV schema")
    if not rows:
        raise RenderError(f"{path}: no data rows")
    return rows


def column(rows, name, path):
    """Numeric values of one column; malformed cells name their line number."""
    index = EXPECTED_COLUMNS.index(name)
    values = []
    for lineno, row in enumerate(rows, start=2):  # line 1 is the header
        if len(row) != len(EXPECTED_COLUMNS):
            raise RenderError(
                f"{path}: line {lineno}: expected {len(EXPECTED_COLUMNS)} fields, got {len(row)}"
            )
        cell = row[index]
        try:
            values.append(float(cell))
        except ValueError:
            raise RenderError(
                f"{path}: line {lineno}: column {name!r} is not numeric: {cell!r}"
            ) from None
    return values


def draw_curves(ax, kind, rows, path):
    x = column(rows, X_COLUMN[kind], path)
    power = column(rows, "ip_pert", path)
    steering = column(rows, "steering_ab", path)
    (power_line,) = ax.plot(x, power, "-", color="tab:blue", label="interferometric power")
    power_line.set_gid("curve-power")
    (steer_line,) = ax.plot(x, steering, "--", color="tab:purple", label="steering A->B")
    steer_line.set_gid("curve-steering")
    ax.set_xlabel(X_LABEL[kind])
    ax.set_ylabel("correlation measure")
    ax.legend(loc="best")


def draw_heatmap(fig, ax, rows, path):
    n = column(rows, "n_th", path)
    f = column(rows, "f", path)
    steering = column(rows, "steering_ab", path)
    n_values = sorted(set(n))
    f_values = sorted(set(f))
    if len(n_values) * len(f_values) != len(rows):
        raise RenderError(f"{path}: rows do not form a complete (n_th, f) grid")
    n_index = {value: k for k, value in enumerate(n_values)}
    f_index = {value: k for k, value in enumerate(f_values)}
    image = [[0.0] * len(n_values) for _ in f_values]
    for nk, fk, s in zip(n, f, steering):
        image[f_index[fk]][n_index[nk]] = s
    mesh = ax.imshow(
        image,
        origin="lower",
        aspect="auto",
        extent=(n_values[0], n_values[-1], f_values[0], f_values[-1]),
        cmap="viridis",
    )
    fig.colorbar(mesh, ax=ax, label="steering A->B")
    ax.set_xlabel("thermal photons per mode")
    ax.set_ylabel("pair-generation parameter f")


def render(kind, input_csv, output_image):
    """Render one figure job; writes the image atomically."""
    stem, _, extension = output_image.rpartition(".")
    if not stem or extension.lower() not in ("svg", "png"):
        raise RenderError(f"{output_image}: output must end in .svg or .png")
    extension = extension.lower()
    rows = load_csv(input_csv)

    fig, ax = plt.subplots(figsize=(6.4, 4.2), constrained_layout=True)
    try:
        if kind in ("fig1", "fig2"):
            draw_curves(ax, kind, rows, input_csv)
        else:
            draw_heatmap(fig, ax, rows, input_csv)
        temp_path = output_image + ".tmp"
        save_kwargs = {"format": extension}
        if extension == "svg":
            save_kwargs["metadata"] = {"Date": None}  # drop timestamp for stable bytes
        try:
            fig.savefig(temp_path, **save_kwargs)
            os.replace(temp_path, output_image)
        except OSError as exc:
            raise RenderError(f"cannot write {output_image}: {exc}") from exc
    finally:
        plt.close(fig)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="plotviz", description="Render dceqi sweep CSV files into figure images."
    )
    parser.add_argument("kind", choices=FIGURE_KINDS, help="figure preset the CSV came from")
    parser.add_argument("input_csv", help="CSV produced by the sweep CLI")
    parser.add_argument("output_image", help="destination image (.svg or .png)")
    args = parser.parse_args(argv)
    try:
        render(args.kind, args.input_csv, args.output_image)
    except RenderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    sys.exit(main())
