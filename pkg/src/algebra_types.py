from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field


def to_camel(name: str) -> str:
    first, *rest = name.split("_")
    return first + "".join(word.capitalize() for word in rest)


class Ambient(Enum):
    RAAG = "RAAG"
    BB = "BB"


class Isotropicity(Enum):
    ZERO = "Zero"
    ONE = "One"
    NEITHER = "Neither"
    NOT_APPLICABLE = "NotApplicable"


class ObstructionMode(Enum):
    QUASI_KAHLER = "quasiKahler"
    KAHLER = "Kahler"


class Verdict(Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


class CertificateKind(Enum):
    CONTRACTIBLE_TREE = "tree"
    JOIN_CRITERION = "join"
    NONZERO_H1 = "h1"
    DISCONNECTED = "pi0"
    TIETZE_TRACE = "tietze"
    MULTIPARTITE_PARTS = "multipartite"
    NO_CONDITION_MATCHED = "noConditionMatched"


class GroupClass(Enum):
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"
    NOT_QUASI_KAHLER = "NotQuasiKahler"


class Kollar(Enum):
    ASPHERICAL_QP = "AsphericalQP"
    NOT_COMMENSURABLE = "NotCommensurable"
    NOT_APPLICABLE = "NotApplicable"


class RealizationKind(Enum):
    PUNCTURED_LINE_PRODUCT = "PuncturedLineProduct"
    MILNOR_FIBER_OF_PRODUCT = "MilnorFiberOfProduct"
    GENERAL_ARRANGEMENT = "GeneralArrangement"


class ReportModel(BaseModel):
    class Config:
        alias_generator = to_camel
        allow_population_by_field_name = True
        use_enum_values = True


class GraphReport(ReportModel):
    vertices: list[str]
    edges: list[list[str]]


class CertificateReport(ReportModel):
    kind: CertificateKind
    detail: str
    parts: Optional[list[list[str]]] = None


class ConnectivityReport(ReportModel):
    verdict: Verdict
    certificate: Optional[CertificateReport] = None


class ComponentReport(ReportModel):
    ambient: Ambient
    w: list[str] = Field(alias="W")
    dim: int
    isotropicity: Isotropicity
    basis_matrix: list[list[str]]


class ObstructionReport(ReportModel):
    passed: bool = Field(alias="pass")
    mode: ObstructionMode
    witness: Optional[str] = None


class ResonanceReport(ReportModel):
    ambient: Ambient
    components: list[ComponentReport]
    obstructions: list[ObstructionReport]


class PresentationReport(ReportModel):
    group: Ambient
    generators: list[str]
    relators: list[str]
    abelianization_rank: int
    torsion: list[int]
    faithful: bool


class StructureConstantReport(ReportModel):
    degrees: list[int]
    i: int
    j: int
    k: int
    value: str


class RingReport(ReportModel):
    ambient: Ambient
    bases: dict[str, list[str]]
    products: list[StructureConstantReport]
    betti: list[int]


class ClassificationReport(ReportModel):
    quasi_kahler: bool
    quasi_projective: bool
    kahler: bool
    projective: bool
    group_class: GroupClass
    class_label: str
    structure: str
    kollar: Kollar
    certificates: list[CertificateReport]
    cross_checks: list[ObstructionReport]
    cross_checks_consistent: Optional[bool] = None
    notes: list[str] = []
    explanation: Optional[list[str]] = None


class RaagClassificationReport(ReportModel):
    quasi_kahler: bool
    quasi_projective: bool
    structure: Optional[str] = None
    certificates: list[CertificateReport]
    obstruction: Optional[ObstructionReport] = None
    notes: list[str] = []


class HyperplaneReport(ReportModel):
    var: int
    shift: int


class RealizationReport(ReportModel):
    kind: RealizationKind
    ambient_dim: int
    hyperplanes: list[HyperplaneReport]
    exponents: list[int]
    degree: int
    nu_images: list[int]
    polynomial: str
    fundamental_group: str
    aspherical: bool


class MilnorReport(ReportModel):
    exact_sequence: str
    exponents: list[int]
    degree: int
    nu_images: list[int]
    total_space_group: str
    fiber_group: str
    kernel_rank: int
    essentiality_checked: bool


class AnalysisReport(ReportModel):
    graph: GraphReport
    connectivity: ConnectivityReport
    classification: ClassificationReport
    raag_classification: Optional[RaagClassificationReport] = None
    presentations: list[PresentationReport]
    cohomology: list[RingReport]
    resonance: list[ResonanceReport]
    realization: Optional[RealizationReport] = None
    milnor: Optional[MilnorReport] = None
    refusals: dict[str, str] = {}


class RealizeCommandReport(ReportModel):
    realization: RealizationReport
    milnor: Optional[MilnorReport] = None
