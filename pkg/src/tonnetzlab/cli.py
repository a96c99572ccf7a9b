"""Command-line front end: JSON analysis reports, SVG diagrams, chord ID.

Commands::

    tonnetzlab analyze CHART [--key K] [--out report.json]
    tonnetzlab render-tonnetz CHART --section NAME [--out file.svg]
    tonnetzlab render-clocks CHART --section NAME --out-dir DIR
    tonnetzlab chord-id AUDIO.wav [--out segments.jsonl] [--spectrogram out.ppm]

All commands are deterministic: identical inputs and flags produce
byte-identical outputs. Exit codes: 0 success, 2 input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .chart import ChartDocument, ChartError, Section, flatten, parse_chart, progression
from .chroma import (
    CorruptHeader,
    UnsupportedFormat,
    identify,
    load_wav,
    render_spectrogram_ppm,
)
from .harmony import ChordSyntaxError, Key, parse_pitch_class, pitch_class_name
from .lattice import embed_path, render_tonnetz_svg
from .rhythm import (
    SubstructureReport,
    clocks_for,
    detect_substructures,
    render_clock_svg,
)
from .transforms import ProgressionAnnotation, annotate_progression

REPORT_VERSION = 1

FLAT_SEVEN_NOTE = (
    "♭VII denotes the lowered-leading-tone chord; "
    "pop-era practice often writes the same chord as plain VII."
)


class UnknownSection(ValueError):
    pass


def _moves_json(annotation: ProgressionAnnotation) -> list[dict]:
    out = []
    for move in annotation.moves:
        out.append(
            {
                "from": move.source.display,
                "to": move.target.display,
                "arity": move.arity,
                "kind": move.kind.value,
                "nr": move.nr_name.value if move.nr_name else None,
            }
        )
    return out


def _rhythm_json(report: SubstructureReport) -> dict:
    return {
        "distinct_clocks": [
            {
                "onsets": [[hour, label] for hour, label in clock.onsets],
                "class": cls.value,
                "partial": clock.partial,
            }
            for clock, cls in zip(report.distinct_clocks, report.classifications)
        ],
        "occurrences": list(report.occurrence_sequence),
        "alternations": [
            {"start": a.start, "length": a.length, "clocks": list(a.clocks)}
            for a in report.alternations
        ],
        "reflections": [
            {"clocks": [r.first, r.second], "axis_hours": list(r.axis_hours)}
            for r in report.reflections
        ],
    }


def _section_json(section: Section, key: Key, meter: int) -> dict:
    chords = progression(section)
    entry: dict = {
        "name": section.name,
        "progression": [c.display for c in chords],
    }
    notes: list[str] = []
    if len(chords) >= 2:
        annotation = annotate_progression(chords, key)
        entry["roman"] = [label.text for label in annotation.roman]
        entry["moves"] = _moves_json(annotation)
        entry["cadences"] = [
            {"kind": c.kind, "start": c.start, "length": c.length}
            for c in annotation.cadences
        ]
        if any("♭VII" in label.text for label in annotation.roman):
            notes.append(FLAT_SEVEN_NOTE)
    substructures = detect_substructures(clocks_for(flatten(section), meter))
    entry["rhythm"] = _rhythm_json(substructures)
    if notes:
        entry["notes"] = notes
    return entry


def build_report(doc: ChartDocument, key: Key | None = None) -> dict:
    """Analysis report covering each distinct section named in the form."""
    key = key or doc.key
    seen: list[str] = []
    for name in doc.form:
        if name not in seen:
            seen.append(name)
    return {
        "version": REPORT_VERSION,
        "title": doc.title,
        "key": pitch_class_name(key.tonic),
        "meter": doc.meter,
        "form": list(doc.form),
        "sections": [
            _section_json(doc.sections[name], key, doc.meter) for name in seen
        ],
    }


def _read_chart(path: str) -> ChartDocument:
    return parse_chart(Path(path).read_text(encoding="utf-8"))


def _get_section(doc: ChartDocument, name: str) -> Section:
    if name not in doc.sections:
        raise UnknownSection(
            f"no section [{name}]; chart defines: {', '.join(doc.sections)}"
        )
    return doc.sections[name]


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _cmd_analyze(args: argparse.Namespace) -> int:
    doc = _read_chart(args.chart)
    key = Key(parse_pitch_class(args.key)) if args.key else None
    report = build_report(doc, key)
    _write_text(args.out, json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    return 0


def _cmd_render_tonnetz(args: argparse.Namespace) -> int:
    doc = _read_chart(args.chart)
    section = _get_section(doc, args.section)
    annotation = annotate_progression(progression(section), doc.key)
    anchor = doc.key.tonic
    svg = render_tonnetz_svg(embed_path(annotation, anchor), anchor)
    _write_text(args.out, svg)
    return 0


def _cmd_render_clocks(args: argparse.Namespace) -> int:
    doc = _read_chart(args.chart)
    section = _get_section(doc, args.section)
    report = detect_substructures(clocks_for(flatten(section), doc.meter))
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for index, clock in enumerate(report.distinct_clocks, start=1):
        (out_dir / f"clock-{index}.svg").write_text(
            render_clock_svg(clock), encoding="utf-8"
        )
    return 0


def _cmd_chord_id(args: argparse.Namespace) -> int:
    buffer = load_wav(args.audio)
    segments, spec = identify(buffer, pre_emphasis=args.pre_emphasis)
    lines = [
        json.dumps(
            {"label": s.label, "start_s": round(s.start, 6), "end_s": round(s.end, 6)},
            ensure_ascii=False,
        )
        for s in segments
    ]
    _write_text(args.out, "\n".join(lines) + "\n")
    if args.spectrogram:
        Path(args.spectrogram).write_bytes(render_spectrogram_ppm(spec))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tonnetzlab",
        description="Harmonic analysis: chord charts, Tonnetz diagrams, "
        "rhythm clocks, and audio chord identification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="write a JSON analysis report for a chart")
    p.add_argument("chart")
    p.add_argument("--key", help="override the chart's key (e.g. A, F#)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("render-tonnetz", help="render a section's path on the Tonnetz")
    p.add_argument("chart")
    p.add_argument("--section", required=True)
    p.add_argument("--out", help="output SVG path (default: stdout)")
    p.set_defaults(func=_cmd_render_tonnetz)

    p = sub.add_parser(
        "render-clocks", help="render one SVG per distinct rhythm clock"
    )
    p.add_argument("chart")
    p.add_argument("--section", required=True)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=_cmd_render_clocks)

    p = sub.add_parser("chord-id", help="identify chords in a 16-bit PCM WAV file")
    p.add_argument("audio")
    p.add_argument("--out", help="output JSONL path (default: stdout)")
    p.add_argument("--spectrogram", help="also write a P6 PPM spectrogram")
    p.add_argument(
        "--pre-emphasis",
        type=float,
        default=0.0,
        dest="pre_emphasis",
        help="first-order pre-emphasis coefficient applied before analysis "
        "(0 disables; boosts upper harmonics)",
    )
    p.set_defaults(func=_cmd_chord_id)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        ChartError,
        ChordSyntaxError,
        UnknownSection,
        UnsupportedFormat,
        CorruptHeader,
        FileNotFoundError,
        IsADirectoryError,
        PermissionError,
    ) as exc:
        print(f"tonnetzlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
