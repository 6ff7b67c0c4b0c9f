from .base import BaseCodeFamily, CodeFamilyParams
from .families import ProductCodeFamily, AntipodalCodeFamily, HalfTurnCodeFamily

FAMILIES = {
    "2.3": ProductCodeFamily,
    "2.7": AntipodalCodeFamily,
    "2.10": HalfTurnCodeFamily,
}


class CodeFamilyFactory:
    @staticmethod
    def create_family(prop: str, params: CodeFamilyParams) -> BaseCodeFamily:
        family_cls = FAMILIES.get(prop)
        if family_cls is None:
            raise ValueError(f"未知码族: {prop}")
        return family_cls(params)

    @staticmethod
    def available() -> list:
        return list(FAMILIES)
