"""
Steklab - Helper functies
Bevat diverse hulpfuncties: parameterparsing, reproduceerbare toevalsgetallen en JSON-conversie
"""
import dataclasses

import numpy as np

from modules.fouten import InvoerFout


def lees_waarde(tekst):
    """
    Zet een parameterwaarde uit de commandoregel om naar int, float, bool of str

    Args:
        tekst (str): Ruwe waarde

    Returns:
        int, float, bool of str
    """
    schoon = tekst.strip()
    if schoon.lower() in ("true", "ja", "yes"):
        return True
    if schoon.lower() in ("false", "nee", "no"):
        return False
    try:
        return int(schoon)
    except ValueError:
        pass
    try:
        return float(schoon)
    except ValueError:
        return schoon


def parseer_parameters(paren):
    """
    Parseer een lijst 'sleutel=waarde' strings

    Args:
        paren (list): Lijst met strings uit --param

    Returns:
        dict: Parameters met omgezette waarden

    Raises:
        InvoerFout: Als een paar geen '=' bevat of de sleutel leeg is
    """
    parameters = {}
    for paar in paren or []:
        if "=" not in paar:
            raise InvoerFout("Parameter moet de vorm sleutel=waarde hebben", parameter=paar)
        sleutel, waarde = paar.split("=", 1)
        sleutel = sleutel.strip()
        if not sleutel:
            raise InvoerFout("Lege parameternaam", parameter=paar)
        parameters[sleutel] = lees_waarde(waarde)
    return parameters


def maak_rng(seed):
    """Maak een reproduceerbare numpy generator"""
    return np.random.default_rng(seed)


def als_json(waarde):
    """
    Zet numpy-types, dataclasses en tuples recursief om naar JSON-vriendelijke types

    Args:
        waarde: Willekeurig resultaatobject

    Returns:
        Object dat json.dumps accepteert
    """
    if dataclasses.is_dataclass(waarde) and not isinstance(waarde, type):
        return {veld.name: als_json(getattr(waarde, veld.name)) for veld in dataclasses.fields(waarde)}
    if isinstance(waarde, dict):
        return {str(k): als_json(v) for k, v in waarde.items()}
    if isinstance(waarde, (list, tuple)):
        return [als_json(v) for v in waarde]
    if isinstance(waarde, np.ndarray):
        return als_json(waarde.tolist())
    if isinstance(waarde, (np.bool_,)):
        return bool(waarde)
    if isinstance(waarde, np.integer):
        return int(waarde)
    if isinstance(waarde, np.floating):
        return float(waarde)
    return waarde
