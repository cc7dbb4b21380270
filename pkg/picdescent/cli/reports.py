"""
Run reports for the management commands.

A report records the command, an echo of its inputs, the computed result,
the named checks it made and the elapsed time. The JSON rendering is the
reference; the text rendering is derived from the same payload.
"""

import json
import time
from contextlib import contextmanager

from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

FORMAT_CHOICES = [
    ('json', 'JSON'),
    ('text', 'Plain text'),
]


class RunReport:
    """
    The outcome of one command run.

    `exit_status` is 0 exactly when every recorded check passed.
    """

    def __init__(self, command, inputs=None):
        self.command = command
        self.inputs = dict(inputs or {})
        self.result = None
        self.checks = {}
        self.elapsed = 0.0

    def check(self, name, passed):
        self.checks[name] = bool(passed)
        return self.checks[name]

    @property
    def passed(self):
        return all(self.checks.values())

    @property
    def exit_status(self):
        return 0 if self.passed else 1

    def failures(self):
        return [name for name, passed in self.checks.items() if not passed]

    @contextmanager
    def timed(self):
        start = time.perf_counter()
        try:
            yield self
        finally:
            self.elapsed = time.perf_counter() - start

    def __repr__(self):
        return f'RunReport({self.command!r}, passed={self.passed})'


class RunReportSerializer(serializers.Serializer):
    """
    Serializer for a run report; field order fixes the JSON key order
    """
    command = serializers.CharField(read_only=True)
    inputs = serializers.DictField(read_only=True)
    result = serializers.JSONField(read_only=True)
    checks = serializers.DictField(child=serializers.BooleanField(), read_only=True)
    passed = serializers.BooleanField(read_only=True)
    exit_status = serializers.IntegerField(read_only=True)
    elapsed = serializers.SerializerMethodField()

    def get_elapsed(self, obj):
        return round(obj.elapsed, 4)


def _scalar(value):
    if isinstance(value, str):
        return value
    return json.dumps(value, ensure_ascii=False)


def _text_lines(data, depth=0):
    pad = '  ' * depth
    lines = []
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(f'{pad}{key}:')
            lines.extend(_text_lines(value, depth + 1))
        elif isinstance(value, list) and value and all(isinstance(item, dict) for item in value):
            lines.append(f'{pad}{key}:')
            for index, item in enumerate(value):
                lines.append(f'{pad}  [{index}]')
                lines.extend(_text_lines(item, depth + 2))
        else:
            lines.append(f'{pad}{key}: {_scalar(value)}')
    return lines


def render_json(data):
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8')


def render_text(data):
    return '\n'.join(_text_lines(data))


def render(report, fmt='json'):
    """The report as JSON or as indented text, both from the serialized payload."""
    data = RunReportSerializer(report).data
    if fmt == 'text':
        return render_text(data)
    return render_json(data)
