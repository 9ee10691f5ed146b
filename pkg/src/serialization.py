"""
Structure Files
===============
JSON documents for graded rings and modules.

Ring documents carry kind "finite_graded_ring" or "monomial_ring"; module
documents carry kind "finite_graded_module" and hold their ring either
inline or as a path relative to the module file. Degrees are written as
group element labels, so dihedral degrees appear in a^i b^j normal form.

The canonical form (what `fmt` prints and replay files contain) lists the
basis sorted by degree and then name, with every coefficient table in the
same order. Parsing the canonical form and serializing again gives the
same text.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from src.additive import GradedSpace, GradedSubgroup
from src.groups import group_from_descriptor
from src.modules import FiniteGradedModule, submodule_generated, validate_module
from src.rings import FiniteGradedRing, MonomialGradedRing, validate_ring
from src.utils import InputError, ParseError, dumps_json

RING_KIND = 'finite_graded_ring'
MONOMIAL_KIND = 'monomial_ring'
MODULE_KIND = 'finite_graded_module'
KINDS = (RING_KIND, MONOMIAL_KIND, MODULE_KIND)

_RING_FIELDS = {'kind', 'name', 'group', 'basis', 'one', 'mul'}
_MONOMIAL_FIELDS = {'kind', 'name', 'group', 'coeff_field_order', 'generator_degree'}
_MODULE_FIELDS = {'kind', 'name', 'ring', 'basis', 'action', 'submodules'}
_BASIS_FIELDS = {'name', 'order', 'degree'}


@dataclass
class LoadedStructure:
    """A parsed structure file and the named submodules it declares."""
    kind: str
    ring: Any
    module: Optional[FiniteGradedModule] = None
    submodules: Dict[str, GradedSubgroup] = field(default_factory=dict)
    path: Optional[Path] = None

    @property
    def structure(self) -> Any:
        return self.module if self.module is not None else self.ring

    @property
    def is_module(self) -> bool:
        return self.module is not None


# ============================================================================
# READING
# ============================================================================

def decode(text: str) -> Any:
    """JSON text to a document, with the decoder position on failure."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc


def parse_text(text: str, base_dir: Optional[Path] = None) -> LoadedStructure:
    return from_document(decode(text), base_dir)


def load_structure(path: Path) -> LoadedStructure:
    """
    Read and validate a ring or module file.

    Args:
        path: File to read

    Returns:
        The parsed structure

    Raises:
        InputError: Missing file, malformed document or failed validation
        ParseError: The file is not valid JSON
    """
    path = Path(path)
    if not path.is_file():
        raise InputError(f"file not found: {path}")
    try:
        text = path.read_text(encoding='utf-8')
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text") from exc
    loaded = parse_text(text, path.parent)
    loaded.path = path
    return loaded


def from_document(document: Any, base_dir: Optional[Path] = None) -> LoadedStructure:
    if not isinstance(document, dict):
        raise InputError("top-level value must be an object")
    kind = document.get('kind')
    if kind == RING_KIND:
        return LoadedStructure(kind, ring_from_document(document))
    if kind == MONOMIAL_KIND:
        return LoadedStructure(kind, monomial_from_document(document))
    if kind == MODULE_KIND:
        module, submodules = module_from_document(document, base_dir)
        return LoadedStructure(kind, module.ring, module, submodules)
    raise InputError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def ring_from_document(document: Dict, where: str = 'ring') -> FiniteGradedRing:
    _check_fields(document, _RING_FIELDS, ('kind', 'group', 'basis', 'one', 'mul'), where)
    group = group_from_descriptor(document['group'])
    names, orders, degrees = _basis(group, document['basis'], where)
    index = {name: i for i, name in enumerate(names)}
    one = _vector(document['one'], index, f"{where}.one")
    mul = _table(document['mul'], index, index, f"{where}.mul")
    ring = FiniteGradedRing(group, names, orders, degrees, mul, one,
                            _name(document, 'R', where))
    validate_ring(ring).raise_if_invalid()
    return ring


def monomial_from_document(document: Dict, where: str = 'ring') -> MonomialGradedRing:
    _check_fields(document, _MONOMIAL_FIELDS,
                  ('kind', 'group', 'coeff_field_order', 'generator_degree'), where)
    group = group_from_descriptor(document['group'])
    q = document['coeff_field_order']
    if not _is_int(q):
        raise InputError(f"{where}.coeff_field_order must be an integer")
    gamma = group.parse(document['generator_degree'])
    return MonomialGradedRing(q, group, gamma, _name(document, 'K[x]', where))


def module_from_document(document: Dict, base_dir: Optional[Path] = None
                         ) -> Tuple[FiniteGradedModule, Dict[str, GradedSubgroup]]:
    """
    Build a module and its declared submodules.

    Args:
        document: Module document
        base_dir: Directory a file-referenced ring is resolved against

    Returns:
        (module, named submodules)
    """
    _check_fields(document, _MODULE_FIELDS, ('kind', 'ring', 'basis', 'action'), 'module')
    ring = _module_ring(document['ring'], base_dir)
    names, orders, degrees = _basis(ring.group, document['basis'], 'module')
    index = {name: i for i, name in enumerate(names)}
    ring_index = {name: i for i, name in enumerate(ring.space.names)}
    action = _table(document['action'], ring_index, index, 'module.action')
    module = FiniteGradedModule(ring, names, orders, degrees, action,
                                _name(document, 'M', 'module'))
    validate_module(module).raise_if_invalid()

    declared = document.get('submodules', {})
    if not isinstance(declared, dict):
        raise InputError("module.submodules must map names to generator lists")
    submodules = {}
    for key in sorted(declared):
        generators = declared[key]
        if not isinstance(generators, list):
            raise InputError(f"module.submodules.{key} must be a list of elements")
        submodules[key] = submodule_generated(module, generators)
    return module, submodules


def _module_ring(value: Any, base_dir: Optional[Path]) -> FiniteGradedRing:
    if isinstance(value, str):
        path = (Path(base_dir) if base_dir is not None else Path.cwd()) / value
        if not path.is_file():
            raise InputError(f"ring file not found: {path}")
        value = decode(path.read_text(encoding='utf-8'))
    if not isinstance(value, dict) or value.get('kind') != RING_KIND:
        raise InputError(f"module.ring must be a {RING_KIND} document or a path to one")
    return ring_from_document(value, 'module.ring')


def _check_fields(document: Dict, allowed: set, required: Sequence[str], where: str):
    missing = [f for f in required if f not in document]
    if missing:
        raise InputError(f"{where}: missing required field(s) {', '.join(missing)}")
    unknown = sorted(set(document) - allowed)
    if unknown:
        raise InputError(f"{where}: unknown field(s) {', '.join(unknown)}")


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _name(document: Dict, default: str, where: str) -> str:
    name = document.get('name', default)
    if not isinstance(name, str) or not name:
        raise InputError(f"{where}.name must be a non-empty string")
    return name


def _basis(group, entries: Any, where: str) -> Tuple[List[str], List[int], List[int]]:
    if not isinstance(entries, list):
        raise InputError(f"{where}.basis must be a list")
    names, orders, degrees = [], [], []
    for idx, entry in enumerate(entries):
        prefix = f"{where}.basis[{idx}]"
        if not isinstance(entry, dict):
            raise InputError(f"{prefix}: expected object, got {type(entry).__name__}")
        _check_fields(entry, _BASIS_FIELDS, ('name', 'order', 'degree'), prefix)
        if not isinstance(entry['name'], str) or not entry['name']:
            raise InputError(f"{prefix}.name must be a non-empty string")
        if not _is_int(entry['order']) or entry['order'] < 1:
            raise InputError(f"{prefix}.order must be a positive integer")
        names.append(entry['name'])
        orders.append(entry['order'])
        degrees.append(group.parse(entry['degree']))
    if len(set(names)) != len(names):
        raise InputError(f"{where}.basis names must be unique")
    return names, orders, degrees


def _vector(coefficients: Any, index: Dict[str, int], where: str) -> List[int]:
    if not isinstance(coefficients, dict):
        raise InputError(f"{where} must map basis names to coefficients")
    vec = [0] * len(index)
    for name, coeff in coefficients.items():
        if name not in index:
            raise InputError(f"{where}: unknown basis name {name!r}")
        if not _is_int(coeff):
            raise InputError(f"{where}.{name} must be an integer")
        vec[index[name]] += coeff
    return vec


def _table(entries: Any, left: Dict[str, int], right: Dict[str, int],
           where: str) -> Dict[Tuple[int, int], Dict[int, int]]:
    """[[left name, right name, {target name: coeff}], ...] to an index table."""
    if not isinstance(entries, list):
        raise InputError(f"{where} must be a list")
    table: Dict[Tuple[int, int], Dict[int, int]] = {}
    for idx, entry in enumerate(entries):
        prefix = f"{where}[{idx}]"
        if not (isinstance(entry, list) and len(entry) == 3):
            raise InputError(f"{prefix}: expected [name, name, {{name: coeff}}]")
        a, b, row = entry
        if a not in left:
            raise InputError(f"{prefix}: unknown basis name {a!r}")
        if b not in right:
            raise InputError(f"{prefix}: unknown basis name {b!r}")
        if (left[a], right[b]) in table:
            raise InputError(f"{prefix}: duplicate entry for ({a}, {b})")
        vec = _vector(row, right, prefix)
        table[(left[a], right[b])] = {k: c for k, c in enumerate(vec) if c}
    return table


# ============================================================================
# WRITING
# ============================================================================

def canonical_order(space: GradedSpace) -> List[int]:
    """Basis indices sorted by degree, then by name."""
    group = space.group
    return sorted(range(space.dim),
                  key=lambda i: (group.sort_key(space.degrees[i]), space.names[i]))


def _coefficients(space: GradedSpace, vec: Iterable[int], order: Sequence[int]) -> Dict[str, int]:
    vec = list(vec)
    return {space.names[k]: int(vec[k]) for k in order if vec[k]}


def _tensor_rows(tensor, left: GradedSpace, right: GradedSpace) -> List[List]:
    left_order, right_order = canonical_order(left), canonical_order(right)
    return [[left.names[i], right.names[j], _coefficients(right, tensor[i, j], right_order)]
            for i in left_order for j in right_order if tensor[i, j].any()]


def _basis_rows(space: GradedSpace) -> List[Dict]:
    rows = space.basis_dicts()
    return [rows[i] for i in canonical_order(space)]


def ring_document(ring: FiniteGradedRing) -> Dict:
    space = ring.space
    return {
        'kind': RING_KIND,
        'name': ring.name,
        'group': ring.group.descriptor(),
        'basis': _basis_rows(space),
        'one': _coefficients(space, ring.one, canonical_order(space)),
        'mul': _tensor_rows(ring.tensor, space, space),
    }


def monomial_document(ring: MonomialGradedRing) -> Dict:
    return {
        'kind': MONOMIAL_KIND,
        'name': ring.name,
        'group': ring.group.descriptor(),
        'coeff_field_order': ring.q,
        'generator_degree': ring.group.label(ring.gamma),
    }


def module_document(module: FiniteGradedModule,
                    submodules: Optional[Dict[str, GradedSubgroup]] = None) -> Dict:
    document = {
        'kind': MODULE_KIND,
        'name': module.name,
        'ring': ring_document(module.ring),
        'basis': _basis_rows(module.space),
        'action': _tensor_rows(module.tensor, module.ring.space, module.space),
    }
    if submodules:
        order = canonical_order(module.space)
        document['submodules'] = {
            key: [_coefficients(module.space, x, order) for x in submodules[key].generators()]
            for key in sorted(submodules)}
    return document


def to_document(structure: Any, submodules: Optional[Dict[str, GradedSubgroup]] = None) -> Dict:
    """Canonical document of a ring or module."""
    if isinstance(structure, FiniteGradedModule):
        return module_document(structure, submodules)
    if isinstance(structure, MonomialGradedRing):
        return monomial_document(structure)
    if isinstance(structure, FiniteGradedRing):
        return ring_document(structure)
    raise InputError(f"cannot serialize {type(structure).__name__}")


def same_structure(first: Any, second: Any) -> bool:
    """Equal up to the order the basis was listed in."""
    return to_document(first) == to_document(second)


# ============================================================================
# FMT
# ============================================================================

def format_text(text: str, base_dir: Optional[Path] = None) -> str:
    """
    Canonical text of a structure file.

    A module whose ring is a file reference keeps the reference.

    Args:
        text: File contents
        base_dir: Directory file references are resolved against

    Returns:
        The canonical JSON text
    """
    document = decode(text)
    loaded = from_document(document, base_dir)
    canonical = to_document(loaded.structure, loaded.submodules)
    if loaded.is_module and isinstance(document.get('ring'), str):
        canonical['ring'] = document['ring']
    return dumps_json(canonical)


def format_file(path: Path, in_place: bool = False) -> str:
    path = Path(path)
    if not path.is_file():
        raise InputError(f"file not found: {path}")
    formatted = format_text(path.read_text(encoding='utf-8'), path.parent)
    if in_place:
        path.write_text(formatted, encoding='utf-8')
    return formatted
