from .registry import MoveRegistration, apply_move, get_move, list_move_kinds, register_move
from .apply import apply_certificate, chain_certificates, final_index, invert_certificate, ledger_trace, replay
from .verify import VerificationReport, certificate_from_disc, verify_equivalence
from .io import (
    certificate_from_dict,
    certificate_to_dict,
    dump_certificate,
    load_certificate,
    move_from_dict,
    move_to_dict,
)

__all__ = [
    "MoveRegistration",
    "VerificationReport",
    "apply_certificate",
    "apply_move",
    "certificate_from_dict",
    "certificate_from_disc",
    "certificate_to_dict",
    "chain_certificates",
    "dump_certificate",
    "final_index",
    "get_move",
    "invert_certificate",
    "ledger_trace",
    "list_move_kinds",
    "load_certificate",
    "move_from_dict",
    "move_to_dict",
    "register_move",
    "replay",
    "verify_equivalence",
]
