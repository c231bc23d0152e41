"""Command-line surface: embed, extract, augment, analyze, bench.

Exit codes are a stable scripting contract: 0 success, 1 I/O or system
failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import __version__, analysis, bitops, dataio, pipeline

_EXIT_IO = 1
_EXIT_USAGE = 2


def _env_threads() -> int | None:
    raw = os.environ.get("STEGAUG_THREADS")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"STEGAUG_THREADS must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"STEGAUG_THREADS must be >= 1, got {value}")
    return value


def _parse_k_choices(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in raw.split(",") if part.strip())
    except ValueError:
        raise ValueError(f"--k-choices must be comma-separated integers, got {raw!r}") from None


def _parse_k_range(raw: str) -> list[int]:
    if ":" in raw:
        lo_s, hi_s = raw.split(":", 1)
        lo, hi = int(lo_s), int(hi_s)
        ks = list(range(lo, hi + 1))
    else:
        ks = [int(raw)]
    if not ks:
        raise ValueError(f"empty k range {raw!r}")
    for k in ks:
        bitops._check_depth(k)
    return ks


def _resolve_threads(args) -> int | None:
    if getattr(args, "threads", None) is not None:
        if args.threads < 1:
            raise ValueError(f"--threads must be >= 1, got {args.threads}")
        return args.threads
    return _env_threads()


def _steg_params(args) -> pipeline.StegParams:
    if args.k is not None:
        choices: tuple[int, ...] = (args.k,)
    elif args.k_choices is not None:
        choices = _parse_k_choices(args.k_choices)
    else:
        choices = pipeline.DEFAULT_K_CHOICES
    return pipeline.StegParams(p=args.p, k_choices=choices, seed=args.seed)


def cmd_embed(args) -> int:
    cover = dataio.read_ppm(args.cover)
    secret = dataio.read_ppm(args.secret)
    stego = bitops.embed_image(cover, secret, args.k)
    dataio.write_ppm(stego, args.out)
    return 0


def cmd_extract(args) -> int:
    stego = dataio.read_ppm(args.stego)
    dataio.write_ppm(bitops.extract_image(stego, args.k), args.out)
    return 0


def _write_records(records, path, mode: str) -> None:
    if mode == "color":
        header = ["output_index", "kind", "transform", "param"]
        rows = [
            [r.output_index, r.kind,
             r.transform if r.transform is not None else "",
             r.param if r.param is not None else ""]
            for r in records
        ]
    else:
        header = ["output_index", "kind", "secret_index", "k"]
        rows = [
            [r.output_index, r.kind,
             r.secret_index if r.secret_index is not None else "",
             r.k if r.k is not None else ""]
            for r in records
        ]
    dataio.write_csv([header] + rows, path)


def cmd_augment(args) -> int:
    samples = dataio.load_samples(args.input)
    batch = pipeline.Batch(samples)
    params = _steg_params(args)
    workers = _resolve_threads(args)
    if args.mode == "color":
        out_batch, records = pipeline.color_augment_batch(batch, params, workers)
    else:
        out_batch, records = pipeline.augment_batch(batch, params, workers)
    dataio.write_container(out_batch.samples, args.out)
    if args.records:
        _write_records(records, args.records, args.mode)
    return 0


def cmd_analyze(args) -> int:
    ks = _parse_k_range(args.k_range)
    population = None
    if args.population:
        population = dataio.load_samples(args.population)
    analysis.write_analysis_csvs(args.outdir, ks, population=population,
                                 saturation_pixels=population)
    return 0


def cmd_bench(args) -> int:
    samples = dataio.load_samples(args.input)
    batch = pipeline.Batch(samples)
    params = _steg_params(args)
    if args.repetitions < 1:
        raise ValueError(f"--repetitions must be >= 1, got {args.repetitions}")
    multi = _resolve_threads(args) or min(4, os.cpu_count() or 1)
    n = len(batch)
    nbytes = batch.samples[0].image.nbytes * n

    def run(workers: int) -> float:
        start = time.perf_counter()
        for _ in range(args.repetitions):
            pipeline.augment_batch(batch, params, workers)
        return time.perf_counter() - start

    for label, workers in (("single-thread", 1), (f"multi-thread ({multi} threads)", multi)):
        elapsed = run(workers)
        total = n * args.repetitions
        print(
            f"{label}: {total / elapsed:,.0f} samples/s, "
            f"{nbytes * args.repetitions / elapsed / 1e6:,.1f} MB/s "
            f"({total} samples in {elapsed:.3f}s, workers={workers})"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stegaug",
        description="LSB-steganography batch augmentation and quantization analysis",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_embed = sub.add_parser("embed", help="embed a secret PPM into a cover PPM")
    p_embed.add_argument("cover")
    p_embed.add_argument("secret")
    p_embed.add_argument("--k", type=int, choices=range(1, 8), required=True,
                         metavar="K", help="bit depth, 1..7")
    p_embed.add_argument("--out", required=True)
    p_embed.set_defaults(func=cmd_embed)

    p_extract = sub.add_parser("extract", help="extract the embedded image from a stego PPM")
    p_extract.add_argument("stego")
    p_extract.add_argument("--k", type=int, choices=range(1, 8), required=True,
                           metavar="K", help="bit depth used at embed time")
    p_extract.add_argument("--out", required=True)
    p_extract.set_defaults(func=cmd_extract)

    p_aug = sub.add_parser("augment", help="augment a batch (SAUG1 container or CIFAR-10 file)")
    p_aug.add_argument("input")
    p_aug.add_argument("--out", required=True)
    p_aug.add_argument("--p", type=float, default=0.5, help="application probability")
    p_aug.add_argument("--seed", type=int, default=0, help="64-bit RNG seed")
    group = p_aug.add_mutually_exclusive_group()
    group.add_argument("--k", type=int, choices=range(1, 8), metavar="K",
                       help="fixed bit depth")
    group.add_argument("--k-choices", help="comma-separated bit depths, e.g. 1,2,3")
    p_aug.add_argument("--threads", type=int, default=None)
    p_aug.add_argument("--records", help="write per-sample provenance CSV here")
    p_aug.add_argument("--mode", choices=("steg", "color"), default="steg")
    p_aug.set_defaults(func=cmd_augment)

    p_an = sub.add_parser("analyze", help="write quantization analysis CSVs")
    p_an.add_argument("--k-range", default="1:7", help="bit depths, e.g. 3 or 1:7")
    p_an.add_argument("--population", help="optional SAUG1/CIFAR pixel population")
    p_an.add_argument("--outdir", required=True)
    p_an.set_defaults(func=cmd_analyze)

    p_bench = sub.add_parser("bench", help="report augmentation throughput")
    p_bench.add_argument("input")
    p_bench.add_argument("--p", type=float, default=0.5)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--repetitions", type=int, default=5)
    group = p_bench.add_mutually_exclusive_group()
    group.add_argument("--k", type=int, choices=range(1, 8), metavar="K")
    group.add_argument("--k-choices")
    p_bench.add_argument("--threads", type=int, default=None)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (dataio.FormatError, ValueError) as exc:
        print(f"stegaug {args.command}: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except OSError as exc:
        print(f"stegaug {args.command}: {exc}", file=sys.stderr)
        return _EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
