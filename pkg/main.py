"""
Steklab - Hoofdprogramma
Voert een benoemd experiment uit en schrijft report.json en data/*.csv
"""
import argparse
import os
import sys
import traceback

# Zorg dat we modules kunnen importeren
application_path = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, application_path)

from modules.logger import logger


def exceptie_handler(exc_type, exc_value, exc_traceback):
    """
    Globale exceptie handler die alle onafgehandelde excepties naar het logbestand schrijft
    """
    exceptie_details = ''.join(traceback.format_exception(exc_type, exc_value, exc_traceback))
    logger.logFout(f"Onafgehandelde exceptie:\n{exceptie_details}")
    sys.__stderr__.write(f"Onafgehandelde exceptie:\n{exceptie_details}\n")


class LogRedirector:
    """
    Klasse die stdout/stderr output ook naar het logbestand schrijft
    """
    def __init__(self, log_functie, originele_stream):
        self.log_functie = log_functie
        self.originele_stream = originele_stream
        self.buffer = ""

    def write(self, tekst):
        self.originele_stream.write(tekst)

        # Log alleen complete regels
        self.buffer += tekst
        if '\n' in self.buffer:
            regels = self.buffer.split('\n')
            for regel in regels[:-1]:
                if regel.strip():
                    self.log_functie(regel)
            self.buffer = regels[-1]

    def flush(self):
        if self.buffer.strip():
            self.log_functie(self.buffer)
            self.buffer = ""
        self.originele_stream.flush()


sys.excepthook = exceptie_handler
sys.stdout = LogRedirector(logger.logInfo, sys.__stdout__)
sys.stderr = LogRedirector(logger.logFout, sys.__stderr__)

from modules.actions import BESCHIKBARE_ACTIES
from modules.experiment import EXIT_GEBRUIKSFOUT, ExperimentConfig, run
from modules.fouten import InvoerFout
from modules.helpers import parseer_parameters


def maak_parser():
    """Argumentparser voor de commandoregel"""
    parser = argparse.ArgumentParser(
        prog="steklab",
        description="Steklov-eigenwaarden en vrije-rand minimale oppervlakken: experimenten met rapport",
    )
    parser.add_argument("--experiment", required=True, choices=sorted(BESCHIKBARE_ACTIES),
                        help="Experiment-id")
    parser.add_argument("--param", action="append", default=[], metavar="SLEUTEL=WAARDE",
                        help="Parameter voor het experiment (herhaalbaar)")
    parser.add_argument("--seed", type=int, default=None, help="Seed voor gerandomiseerde experimenten")
    parser.add_argument("--out", default=None, help="Uitvoermap (standaard [Algemeen] uitvoermap)")
    return parser


def main(argv=None):
    """Start Steklab en geef de exitcode terug"""
    argumenten = maak_parser().parse_args(argv)
    try:
        parameters = parseer_parameters(argumenten.param)
    except InvoerFout as e:
        logger.logFout(f"Ongeldige --param: {e}")
        print(f"steklab: {e}", file=sys.stderr)
        return EXIT_GEBRUIKSFOUT

    logger.logInfo(f"Steklab gestart: {argumenten.experiment} {parameters}")
    code = run(ExperimentConfig(argumenten.experiment, parameters, argumenten.seed, argumenten.out))
    print(f"{argumenten.experiment}: {'geslaagd' if code == 0 else 'niet geslaagd'} (exitcode {code})")
    logger.logInfo(f"Steklab afgesloten met exitcode {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
