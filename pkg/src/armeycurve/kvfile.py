"""Line-oriented ``key = value`` files with ``[section]`` headers.

Used for configuration, column mappings and machine-readable reports.
Records render with :mod:`configparser` (case preserved, no
interpolation); rendering the result of :func:`parse_records` reproduces
the input byte for byte.
"""
import configparser
import io

from .errors import FormatError


def _parser():
    cp = configparser.RawConfigParser(delimiters=("=",), comment_prefixes=("#", ";"))
    cp.optionxform = str
    return cp


def read_key_values(path):
    """Flat ``{key: value}`` from a file; section headers are ignored."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line[0] in "#;" or (line[0] == "[" and line[-1] == "]"):
                continue
            if "=" not in line:
                raise FormatError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key] = value
    return out


def format_value(value):
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return ",".join(format_value(v) for v in value)
    if hasattr(value, "item"):
        return format_value(value.item())
    return str(value)


def render_records(sections):
    """Render ``{section: {key: value}}``; values go through :func:`format_value`."""
    cp = _parser()
    for name, items in sections.items():
        cp.add_section(name)
        for key, value in items.items():
            cp.set(name, key, format_value(value))
    buf = io.StringIO()
    cp.write(buf)
    return buf.getvalue()


def parse_records(text):
    """Inverse of :func:`render_records`; all values come back as strings."""
    cp = _parser()
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise FormatError(f"malformed record document: {exc}") from exc
    return {s: dict(cp.items(s)) for s in cp.sections()}
