"""JSON certificate for an analyzed instance.

The certificate is a plain dict of JSON-safe values. Complex
amplitudes are {"re": ..., "im": ...} pairs in flat-index order
(index = alice_level * outcomes + bob_level); serialization sorts keys
so repeated runs emit byte-identical documents.
"""

from __future__ import annotations

import json
from typing import Any

from .games import AnalysisReport

__all__ = ["SCHEMA_VERSION", "build_certificate", "certificate_json", "parse_certificate"]

SCHEMA_VERSION = "1"


def build_certificate(report: AnalysisReport) -> dict[str, Any]:
    ineq = report.inequality
    return {
        "schema_version": SCHEMA_VERSION,
        "spec": {
            "outcomes": report.spec.outcomes,
            "settings": report.spec.settings,
        },
        "terms": [
            {
                "alice_setting": a.setting,
                "alice_outcome": a.outcome,
                "bob_setting": b.setting,
                "bob_outcome": b.outcome,
            }
            for a, b in ineq.terms
        ],
        "classical_bound": int(ineq.classical_bound),
        "quantum_bound": float(ineq.quantum_bound),
        "optimal_state": [
            {"re": float(z.real), "im": float(z.imag)} for z in ineq.optimal_state
        ],
        "per_term_probs": [float(p) for p in ineq.per_term_probs],
        "game": {
            "questions": [
                {
                    "alice_setting": s,
                    "bob_setting": t,
                    "winning": [
                        {"alice_outcome": a, "bob_outcome": b}
                        for a, b in sorted(win)
                    ],
                }
                for (s, t), win in zip(report.game.questions, report.game.winning)
            ]
        },
        "stats": {
            "quantum_win": float(report.quantum_win),
            "classical_win": float(report.classical_win),
            "p": None
            if report.prediction_prob is None
            else float(report.prediction_prob),
            "I_ab": None
            if report.mutual_info_bits is None
            else float(report.mutual_info_bits),
        },
    }


def certificate_json(certificate: dict[str, Any]) -> str:
    """Deterministic serialization: sorted keys, fixed indentation."""
    return json.dumps(certificate, indent=2, sort_keys=True)


def parse_certificate(text: str) -> dict[str, Any]:
    """Inverse of :func:`certificate_json`; round-trips losslessly."""
    return json.loads(text)
