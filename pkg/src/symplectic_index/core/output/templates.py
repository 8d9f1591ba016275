"""Text templates for index reports."""

import logging
from typing import Any, Dict

from jinja2 import BaseLoader, Environment, TemplateError

from ..maslov import HalfInteger


logger = logging.getLogger(__name__)


def _half(twice: Any) -> str:
    """Jinja filter: twice a half-integer to its exact text."""
    return "n/a" if twice is None else str(HalfInteger(int(twice)))


def _signed(value: Any) -> str:
    return "n/a" if value is None else f"{int(value):+d}"


class TemplateManager:
    """Built-in Jinja2 templates for the ``text`` output format."""

    def __init__(self) -> None:
        """Initialize template manager with built-in templates."""
        self.templates: Dict[str, str] = {}
        self.jinja_env = Environment(
            loader=BaseLoader(),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )
        self.jinja_env.filters["half"] = _half
        self.jinja_env.filters["signed"] = _signed
        self._load_builtin_templates()

    def _load_builtin_templates(self) -> None:
        """Load built-in templates."""
        self.templates["index"] = """\
index = {{ report.index }}
flavor = {{ report.convention_tag.value }}
duration = {{ "%g"|format(report.duration) }}
{% if show_crossings %}
crossings = {{ report.crossings|length }}
{% for c in report.crossings %}
  t = {{ "%.9f"|format(c.time) }}  {{ c.kind }}  dim {{ c.dimension }}  sign {{ c.signatures|map("signed")|join("/") }}  weight {{ c.weight_twice|half }}
{% endfor %}
{% endif %}
"""

        self.templates["defect"] = """\
status = {{ report.status.value }}
{% if report.skipped_condition %}
skipped = {{ report.skipped_condition }}
{% endif %}
mu_plus = {{ report.mu_plus_twice|half }}
mu_minus = {{ report.mu_minus_twice|half }}
mu_loop = {{ report.mu_loop_twice|half }}
sign_q = {{ report.q_signature|signed }}
defect = {{ report.defect_twice|half }}
{% if symmetry_residual is not none %}
symmetry_residual = {{ "%.3e"|format(symmetry_residual) }}
{% endif %}
"""

        self.templates["diagonal"] = self.templates["defect"] + """\
mu_half = {{ report.mu_half_twice|half }}
factor_index = {{ report.factor_index_twice|half }}
sign_q_zero = {{ report.sign_q_zero|lower }}
loop_equals_twice_half = {{ report.loop_equals_twice_half|lower }}
half_equals_factor_index = {{ report.half_equals_factor_index|lower }}
"""

        self.templates["hormander"] = """\
s = {{ report.index }}
{% if report.signature_twice is not none %}
signature_formula = {{ report.signature_twice|half }}
{% endif %}
attempts = {{ report.attempts }}
"""

        self.templates["pushforward"] = """\
{% if report.image %}
{{ report.image }}
{% endif %}
"""

        self.templates["seidel"] = """\
verdict = {{ report.verdict }}
source = {{ report.source }}
expected = {{ report.expected }}
actual = {{ report.actual }}
{% for term in report.missing %}
  missing {{ term }}
{% endfor %}
{% for term in report.unexpected %}
  unexpected {{ term }}
{% endfor %}
{% for text, ok in report.split_checks.items() %}
  split {{ text }} {{ "ok" if ok else "MISMATCH" }}
{% endfor %}
"""

        self.templates["suite"] = """\
seed = {{ report.seed }}
trials = {{ report.trials if report.trials is not none else "default" }}
{% for s in report.summaries %}
{{ "%-22s"|format(s.name) }} pass {{ "%4d"|format(s.passed) }}  skip {{ "%4d"|format(s.skipped) }}  fail {{ "%4d"|format(s.failed) }}{% if s.warnings %}  ! {{ s.warnings|join("; ") }}{% endif %}

{% endfor %}
{% for r in failures %}
FAIL {{ r.suite }} trial {{ r.trial }}: {{ r.detail }}
{% endfor %}
result = {{ "PASS" if report.ok else "FAIL" }}
"""

    def render(self, template_name: str, report: Any, **kwargs: Any) -> str:
        """
        Render a template.

        Args:
            template_name: Name of the template
            report: Report model exposed to the template as ``report``
            **kwargs: Additional template variables

        Returns:
            Rendered text
        """
        if template_name not in self.templates:
            raise ValueError(f"Template not found: {template_name}")
        template = self.jinja_env.from_string(self.templates[template_name])
        try:
            return template.render(report=report, **kwargs)
        except TemplateError as e:
            logger.error(f"Template rendering failed: {e}")
            raise ValueError(f"Template rendering error: {e}")

    def list_templates(self) -> Dict[str, str]:
        """Template names mapped to a one-line description."""
        descriptions = {
            "index": "Index value with crossing lines",
            "defect": "Doubling index formula terms",
            "diagonal": "Diagonal double identities",
            "hormander": "Hörmander index",
            "pushforward": "Pushed-forward Novikov element",
            "seidel": "Seidel pushforward verification",
            "suite": "Per-suite pass/skip/fail counts",
        }
        return {name: descriptions.get(name, "Custom template") for name in self.templates}
