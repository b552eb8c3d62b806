"""
toricarc - Presentación de Reportes
===================================

Convierte el diccionario de un subcomando en JSON determinista o en texto
legible. Las tablas se arman con pandas.
"""

from typing import Any, Callable, Dict, List

import pandas as pd

from core.utils.file_handler import dump_json
from core.utils.logger import get_logger

log = get_logger(__name__)


def _yes_no(value: bool) -> str:
    return "sí" if value else "no"


def _cell(value: Any) -> str:
    return "-" if value is None else str(value)


def _table(rows: List[Dict[str, Any]]) -> str:
    if not rows:
        return "  (vacía)"
    return pd.DataFrame(rows).to_string(index=False)


def _lines(title: str, items: List[str]) -> List[str]:
    return [f"{title}:"] + [f"  {item}" for item in items]


class ReportRenderer:
    """Renderiza reportes en 'json' o 'text'."""

    def __init__(self):
        self.templates: Dict[str, Callable[[Dict[str, Any]], List[str]]] = {
            'validate': self._text_validate,
            'cohomology': self._text_cohomology,
            'quantum': self._text_quantum,
            'series': self._text_series,
            'verify-main': self._text_verify_main,
            'codim': self._text_codim,
            'strata': self._text_strata,
            'floer': self._text_floer,
            'locus': self._text_locus,
            'jets': self._text_jets,
        }

    def render(self, payload: Dict[str, Any], fmt: str) -> str:
        """
        Texto final del reporte.

        Args:
            payload: Reporte con 'schema_version' y 'command'
            fmt: 'json' o 'text'

        Returns:
            Texto terminado en salto de línea
        """
        if fmt == "json":
            return dump_json(payload) + "\n"

        template = self.templates.get(payload["command"])
        if template is None:
            log.warning(f"Sin plantilla de texto para {payload['command']}, se usa JSON")
            return dump_json(payload) + "\n"
        return "\n".join(template(payload)) + "\n"

    # ===================================
    # Plantillas de texto
    # ===================================

    def _text_validate(self, p: Dict[str, Any]) -> List[str]:
        v = p["validation"]
        lines = [
            f"Abanico {p['fan']} (dim {p['dim']}, {p['n_rays']} rayos)",
            f"  simplicial:            {_yes_no(v['simplicial'])}",
            f"  liso:                  {_yes_no(v['smooth'])}",
            f"  emparejado en facetas: {_yes_no(v['facet_paired'])}",
            f"  rayos generan:         {_yes_no(v['rays_positively_span'])}",
            f"  pseudo-completo:       {_yes_no(v['pseudo_complete'])}",
            f"  Fano:                  {_yes_no(v['fano'])}",
            f"  f-vector:              {p['f_vector']}",
            f"  colecciones primitivas: {p['primitive_collections']}",
        ]
        if v["details"] != "ok":
            lines.append(f"  detalles: {v['details']}")
        return lines

    def _text_cohomology(self, p: Dict[str, Any]) -> List[str]:
        lines = [
            f"Cohomología clásica de {p['fan']} (r = {p['rank_b']})",
            f"  base de A:         {p['a_basis']}",
            f"  base de Hilbert:   {p['hilbert_basis']}",
            f"  clases [Z_i] en B: {p['divisor_classes']}",
        ]
        lines += _lines("Relaciones", p["relations"])
        lines += _lines("Base de Gröbner", p["groebner_basis"])
        lines.append(f"Betti: {p['betti']} (total {p['total']})")
        return lines

    def _text_quantum(self, p: Dict[str, Any]) -> List[str]:
        q = "simbólico" if p["q_spec"] is None else ", ".join(p["q_spec"])
        lines = [f"Cohomología cuántica de {p['fan']} ({p['kind']}, q = {q})"]
        lines += [f"  advertencia: {w}" for w in p["warnings"]]
        lines += _lines("Relaciones", p["relations"])
        lines += _lines("Base de Gröbner", p["groebner_basis"])
        if p["dimension"] is not None:
            label = "Rango sobre Q[q, q^-1]" if p["kind"] == "quantum-symbolic" else "Dimensión del cociente"
            lines.append(f"{label}: {p['dimension']}")

        rank = p["rank_check"]
        lines.append(f"Rango esperado (suma de Betti): {rank['expected']}")
        lines.append(_table([
            {"prueba": t["index"], "q": ", ".join(t["q_spec"]), "dim": t["dimension"], "ok": _yes_no(t["ok"])}
            for t in rank["trials"]
        ]))
        lines.append(f"Verificación de rango: {'pasa' if rank['passed'] else 'FALLA'}")
        lines.append("Tabla de productos:")
        lines.append(_table([
            {"factores": "*".join(f"x{i}" for i in e["factors"]), "producto": e["value"]}
            for e in p["product_table"]
        ]))
        return lines

    def _text_series(self, p: Dict[str, Any]) -> List[str]:
        verdict = "coincide" if p["holds"] else f"difiere desde el grado {p['first_mismatch']}"
        lines = [f"Serie de Cousin de {p['fan']} hasta s^{p['cutoff']}: {verdict}"]
        lines.append(_table([
            {"grado": k, "1/(1-s)^r": lhs, "E(s)h(s)": rhs, "E(s)": e}
            for k, (lhs, rhs, e) in enumerate(zip(p["lhs"], p["rhs"], p["semigroup_series"]))
        ]))
        lines.append(f"h-vector: {p['h_vector']}")
        for item in p["primitive_relations"]:
            relation = " + ".join(f"{c}*v{i}" for i, c in item["relation"]) or "0"
            lines.append(f"  relación primitiva de {item['collection']}: {relation}")
        return lines

    def _text_verify_main(self, p: Dict[str, Any]) -> List[str]:
        lines = [
            f"Verificación del teorema para {p['fan']}",
            f"  bien definido:   {_yes_no(p['well_defined'])}",
            f"  sobreyectivo:    {_yes_no(p['surjective'])}",
            f"  rango igual:     {_yes_no(p['rank_equal'])}",
            f"  suma de Betti:   {p['betti_total']}",
            f"  serie de Cousin: {'coincide' if p['cousin_series_holds'] else 'no coincide'}",
        ]
        lines += [f"  advertencia: {w}" for w in p["warnings"]]
        lines.append(_table([
            {
                "prueba": t["index"],
                "q": ", ".join(t["q_spec"]),
                "dim cuántica": _cell(t["quantum_dimension"]),
                "dim arcos": _cell(t["arc_dimension"]),
                "acuerdo": _yes_no(t["presentations_agree"]),
            }
            for t in p["trials"]
        ]))
        lines += [f"  problema: {problem}" for problem in p["problems"]]
        lines.append("Resultado: " + ("VERIFICADO" if p["passed"] else "FALLA"))
        return lines

    def _text_codim(self, p: Dict[str, Any]) -> List[str]:
        return [f"codim(Lambda^{p['b']} X en Lambda^{p['a']} X) = {p['codim']} ({p['fan']})"]

    def _text_strata(self, p: Dict[str, Any]) -> List[str]:
        return [
            f"Estrato Lambda^={p['a']} X de {p['fan']}",
            f"  codimensión:      {p['codim']}",
            f"  Poincaré de X:    {p['poincare_text']}",
        ]

    def _text_floer(self, p: Dict[str, Any]) -> List[str]:
        lines = [
            f"HF(Lambda X) para {p['fan']}",
            f"  rango sobre C[A]:   {p['rank']}",
            f"  rango cuántico:     {p['quantum_rank']} ({'coincide' if p['matches_quantum'] else 'difiere'})",
            f"  desplazamientos:    {p['shifts']}",
            f"  periodo:            {p['period']}",
        ]
        if p["graded_ranks"] is not None:
            lines.append(_table([{"grado": k, "dim HF^k": v} for k, v in enumerate(p["graded_ranks"])]))
        return lines

    def _text_locus(self, p: Dict[str, Any]) -> List[str]:
        lines = [f"Lugar excepcional de jets de {p['fan']} (orden {p['order']})"]
        for c in p["components"]:
            lines.append(f"  {c['collection']}: codim {c['codim']}: ({', '.join(c['generators'])})")
        return lines

    def _text_jets(self, p: Dict[str, Any]) -> List[str]:
        lines = [f"Jets de orden {p['order']} en {', '.join(p['base_vars'])}"]
        lines.append(_table([{"k": r["k"], "n": r["n"], "relación": r["text"]} for r in p["relations"]]))
        return lines


__all__ = ['ReportRenderer']
