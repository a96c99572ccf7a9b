"""Text chord-chart parsing: song form, sections, measures, timed chords.

Chart format
------------
Header lines come first::

    title: In My Life (lead sheet)
    key: A
    meter: 4/4
    form: Verse Bridge Verse Bridge Interlude Bridge Coda

``meter`` uses the numerator as beats per measure (quarter-note beat).
``form`` lists section names in playing order; every name must be defined.
Sections may also be defined without appearing in the form.

A section starts with ``[Name]`` on its own line. Body lines hold measures
separated by ``|`` (line breaks also end a measure). A measure is a list of
whitespace-separated events ``CHORD:beats``; ``:beats`` may be omitted for a
chord filling the whole measure. Event durations must sum to the meter.

A ``~`` prefix marks a tie: ``~A:2`` continues the previous A rather than
restriking it, which matters for harmonic-rhythm clocks (a tied chord produces
no new onset). The tied chord must match the previous event's chord.

``#`` starts a comment when it begins a line or follows whitespace; a ``#``
inside a token is an accidental (``f#:2`` is F-sharp minor for two beats).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .harmony import (
    ChordSymbol,
    ChordSyntaxError,
    Key,
    parse_chord_symbol,
    parse_pitch_class,
    pitch_class_name,
)


class ChartError(ValueError):
    """Base class for chart validation failures."""


class MeterMismatch(ChartError):
    def __init__(self, section: str, measure_index: int, total: int, meter: int):
        super().__init__(
            f"section [{section}] measure {measure_index + 1}: "
            f"durations sum to {total}, meter is {meter}"
        )
        self.section = section
        self.measure_index = measure_index


class UnknownSectionInForm(ChartError):
    pass


class DuplicateSection(ChartError):
    pass


class ChordParseError(ChartError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class BadTie(ChartError):
    pass


@dataclass(frozen=True)
class ChordEvent:
    symbol: ChordSymbol
    duration: int  # beats
    tied: bool = False  # continuation of the previous event's chord


Measure = tuple[ChordEvent, ...]


@dataclass(frozen=True)
class Section:
    name: str
    measures: tuple[Measure, ...]


@dataclass(frozen=True)
class TimedChord:
    symbol: ChordSymbol
    onset: int  # beats from section start
    duration: int


@dataclass
class ChartDocument:
    title: str
    key: Key
    meter: int  # beats per measure, quarter-note beat
    form: tuple[str, ...]
    sections: dict[str, Section] = field(default_factory=dict)

    def section(self, name: str) -> Section:
        return self.sections[name]


def _strip_comment(line: str) -> str:
    for i, ch in enumerate(line):
        if ch == "#" and (i == 0 or line[i - 1] in " \t"):
            return line[:i]
    return line


def _parse_meter(text: str, line_no: int) -> int:
    head = text.split("/", 1)[0].strip()
    if not head.isdigit() or int(head) < 1:
        raise ChartError(f"line {line_no}: bad meter {text!r}")
    return int(head)


def _parse_event(token: str, line_no: int, column: int, meter: int) -> ChordEvent:
    tied = token.startswith("~")
    body = token[1:] if tied else token
    if ":" in body:
        chord_text, _, beats_text = body.partition(":")
        if not beats_text.isdigit() or int(beats_text) < 1:
            raise ChordParseError(line_no, column, f"bad duration in {token!r}")
        duration = int(beats_text)
    else:
        chord_text, duration = body, meter
    try:
        symbol = parse_chord_symbol(chord_text)
    except ChordSyntaxError as exc:
        raise ChordParseError(line_no, column, str(exc)) from exc
    return ChordEvent(symbol, duration, tied)


def parse_chart(text: str) -> ChartDocument:
    """Parse and fully validate a chart document."""
    title = ""
    key: Key | None = None
    meter: int | None = None
    form: tuple[str, ...] | None = None

    sections: dict[str, Section] = {}
    current: str | None = None
    measures: list[Measure] = []
    last_event: ChordEvent | None = None

    def close_section() -> None:
        nonlocal current, measures, last_event
        if current is not None:
            sections[current] = Section(current, tuple(measures))
        current, measures, last_event = None, [], None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue

        if line.strip().startswith("[") and line.strip().endswith("]"):
            close_section()
            name = line.strip()[1:-1].strip()
            if not name:
                raise ChartError(f"line {line_no}: empty section name")
            if name in sections:
                raise DuplicateSection(f"line {line_no}: section [{name}] redefined")
            current = name
            continue

        if current is None:
            if ":" not in line:
                raise ChartError(f"line {line_no}: expected 'header: value'")
            head, _, value = line.partition(":")
            head, value = head.strip().lower(), value.strip()
            if head == "title":
                title = value
            elif head == "key":
                key = Key(parse_pitch_class(value))
            elif head == "meter":
                meter = _parse_meter(value, line_no)
            elif head == "form":
                form = tuple(value.split())
            else:
                raise ChartError(f"line {line_no}: unknown header {head!r}")
            continue

        if meter is None:
            raise ChartError(f"line {line_no}: meter must be declared before sections")
        for chunk in line.split("|"):
            tokens = chunk.split()
            if not tokens:
                continue
            events: list[ChordEvent] = []
            for token in tokens:
                column = raw.index(token) + 1
                event = _parse_event(token, line_no, column, meter)
                if event.tied:
                    if last_event is None:
                        raise BadTie(
                            f"line {line_no}: tie with no preceding chord"
                        )
                    if event.symbol != last_event.symbol:
                        raise BadTie(
                            f"line {line_no}: tie continues "
                            f"{last_event.symbol.display!r}, got {token!r}"
                        )
                events.append(event)
                last_event = event
            total = sum(e.duration for e in events)
            if total != meter:
                raise MeterMismatch(current, len(measures), total, meter)
            measures.append(tuple(events))
    close_section()

    if key is None or meter is None or form is None:
        missing = [
            name
            for name, value in (("key", key), ("meter", meter), ("form", form))
            if value is None
        ]
        raise ChartError(f"missing header(s): {', '.join(missing)}")
    for name in form:
        if name not in sections:
            raise UnknownSectionInForm(f"form names unknown section {name!r}")
    return ChartDocument(title, key, meter, form, sections)


def flatten(section: Section) -> list[TimedChord]:
    """Timed chords with cumulative onsets; tied events extend their chord.

    Consecutive identical chords that are *not* tied stay separate: a
    restrike is a new onset and matters for harmonic rhythm.
    """
    out: list[TimedChord] = []
    beat = 0
    for measure in section.measures:
        for event in measure:
            if event.tied and out:
                prev = out[-1]
                out[-1] = TimedChord(prev.symbol, prev.onset, prev.duration + event.duration)
            else:
                out.append(TimedChord(event.symbol, beat, event.duration))
            beat += event.duration
    return out


def progression(section: Section) -> list[ChordSymbol]:
    """Chord sequence with consecutive duplicates collapsed.

    A chord held (or restruck) across a barline is one progression element.
    """
    out: list[ChordSymbol] = []
    for timed in flatten(section):
        if not out or out[-1] != timed.symbol:
            out.append(timed.symbol)
    return out


def _event_token(event: ChordEvent, meter: int) -> str:
    text = event.symbol.canonical()
    if event.duration != meter:
        text += f":{event.duration}"
    elif event.tied:
        text += f":{event.duration}"
    return ("~" if event.tied else "") + text


def serialize_chart(doc: ChartDocument) -> str:
    """Canonical text form; ``parse_chart`` of the result round-trips."""
    lines = []
    if doc.title:
        lines.append(f"title: {doc.title}")
    lines.append(f"key: {pitch_class_name(doc.key.tonic)}")
    lines.append(f"meter: {doc.meter}/4")
    lines.append(f"form: {' '.join(doc.form)}")
    for section in doc.sections.values():
        lines.append("")
        lines.append(f"[{section.name}]")
        if section.measures:
            lines.append(
                " | ".join(
                    " ".join(_event_token(e, doc.meter) for e in measure)
                    for measure in section.measures
                )
            )
    return "\n".join(lines) + "\n"
