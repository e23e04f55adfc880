"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class TextIn(BaseModel):
    text: str
    assume_section: bool = False


class ViolationOut(BaseModel):
    code: str
    where: str
    message: str


class ValidateOut(BaseModel):
    ok: bool
    violations: list[ViolationOut]


class InvariantsOut(BaseModel):
    e: int
    sigma: int | None
    chi_h: str | None
    b_plus: int | None
    b_minus: int | None
    pi1: str
    h1: str
    label: str | None
    text: str


class MonodromyOut(BaseModel):
    genus: int
    matrix: list[list[int]]
    identity: bool


class ParityOut(BaseModel):
    parities: list[str]


class DocumentOut(BaseModel):
    document: str


class ReportOut(BaseModel):
    report: str


class SumIn(BaseModel):
    left_text: str
    right_text: str
    gammas: list[str] = Field(default_factory=list)
    phi1: str = ""
    phi2: str = ""


class CsumIn(BaseModel):
    left_text: str
    right_text: str


class TradeIn(BaseModel):
    text: str
    index: int


class BlowdownIn(BaseModel):
    text: str
    section_index: int


class StepIn(BaseModel):
    genus: int
    framing: int


class Example42In(BaseModel):
    framing: int


class WallIn(BaseModel):
    value: int
    d: int
    sign_h: str
    sign_h_prime: str


class ValueOut(BaseModel):
    value: int


class AdjunctionIn(BaseModel):
    genus: int
    square: int
    pairing: int


class BoolOut(BaseModel):
    ok: bool


class SimpleTypeIn(BaseModel):
    square: int
    e: int
    sigma: int


class SymmetryIn(BaseModel):
    value: int
    e: int
    sigma: int


class SectionIn(BaseModel):
    b_plus: int
    nontrivial: bool
    k: int


class VerdictOut(BaseModel):
    verdict: str


class VanishingIn(BaseModel):
    torus_square: int = 0
    sphere_square: int = 0


class VanishingOut(BaseModel):
    lines: list[str]
    vanishes: bool
    text: str


class ErrorOut(BaseModel):
    kind: str
    message: str
    line: int | None = None
    col: int | None = None
