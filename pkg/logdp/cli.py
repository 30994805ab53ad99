""" Command line front end. It reads the command line arguments and the optional
configuration file, runs the requested classification, verification or
enumeration and writes one JSON document to standard output. Status lines go to
standard error. """

import argparse  # for command line parsing
import logging
import sys
from collections import OrderedDict

from logdp import config, core, data_service, families
from logdp.dynkin import (ConfigName, config_of, elliptic_pencil_check, enumerate_configurations, enumerate_union,
                          sorted_configs)
from logdp.errors import LogDPError, ParseError
from logdp.polyq import parse_polynomial
from logdp.singclass import (classify_curve_germ, classify_projective_point, classify_surface_double_point,
                             is_symmetric_germ, multiplicity, symmetric_center_verdict)
from logdp.wps import WeightedSpace

EXIT_SUCCESS = 0
EXIT_FAIL = 1
EXIT_INPUT_ERROR = 2


def _add_config_file_argument(parser):
    parser.add_argument("--config_file", type=str, required=False,
                        help="Specify the path to a configuration file.", metavar="FILEPATH")


def get_cli_arguments(argv=None):
    """ Returns command line arguments as a dictionary keyed by option name. """

    logging.debug('Getting cli arguments')

    parser = argparse.ArgumentParser(description="Exact checks for log del Pezzo surfaces of index at most two.")
    parser.add_argument("--verbose", action="store_true", help="Print algorithm traces to standard error.")

    subparser = parser.add_subparsers(title="commands", dest="command")
    subparser.required = True

    config_parser = subparser.add_parser("config",
                                         help='Create the default configuration file.')
    config_parser.add_argument("--output_config", type=str, required=True,
                               help="Specify the output path to a configuration file.", metavar="FILEPATH")
    config_parser.add_argument("-f", action="store_true", help="Overwrite the destination file if it already exists.")

    classify_parser = subparser.add_parser("classify",
                                           help='Classify a curve or surface germ, or a point of a hypersurface.')
    classify_parser.add_argument("--germ", type=str, required=True, metavar="POLYNOMIAL",
                                 help="Polynomial vanishing at the origin, or a hypersurface equation with --point.")
    classify_parser.add_argument("--surface", action="store_true",
                                 help="Classify as a surface double point instead of a plane curve germ.")
    classify_parser.add_argument("--point", type=str, default=None, metavar="X:Y:...",
                                 help="Classify the hypersurface at this homogeneous point.")
    classify_parser.add_argument("--weights", type=str, default=None, metavar="W0,W1,...",
                                 help="Weights of the homogeneous coordinates for --point.")
    classify_parser.add_argument("--variables", type=str, default=None, metavar="X,Y,...",
                                 help="Ordered variable list; defaults to the sorted names of the polynomial.")
    classify_parser.add_argument("--order", type=int, default=None, metavar="N",
                                 help="Truncation order of the splitting lemma.")
    _add_config_file_argument(classify_parser)

    verify_parser = subparser.add_parser("verify",
                                         help='Verify equations against the hypotheses of a family.')
    verify_parser.add_argument("--family", type=str, required=True, choices=list(families.VERIFIERS.keys()))
    verify_parser.add_argument("--input", type=str, required=True, action="append", metavar="FILEPATH",
                               help="Polynomial file; repeat to verify several files.")
    verify_parser.add_argument("--points", type=str, default=None, metavar="FILEPATH",
                               help="JSON list of known singular points, classified in addition to the search.")
    verify_parser.add_argument("--order", type=int, default=None, metavar="N",
                               help="Truncation order of the splitting lemma.")
    _add_config_file_argument(verify_parser)

    enumerate_parser = subparser.add_parser("enumerate",
                                            help='List the configurations of all subdiagrams of an ADE diagram.')
    source_group = enumerate_parser.add_mutually_exclusive_group(required=True)
    source_group.add_argument("--ade", type=str, metavar="NAME",
                              help="Configuration name such as \"A_5 A_1\", or alternatives joined by '|'.")
    source_group.add_argument("--diagram", type=str, metavar="FILEPATH", help="Diagram JSON file.")
    _add_config_file_argument(enumerate_parser)

    pencil_parser = subparser.add_parser("pencil-check",
                                         help='Check that a weighted diagram is an elliptic pencil.')
    pencil_parser.add_argument("--diagram", type=str, required=True, metavar="FILEPATH", help="Diagram JSON file.")
    pencil_parser.add_argument("--mult", type=str, default=None, metavar="V=M,...",
                               help="Multiplicities; defaults to the ones stored in the diagram file.")
    _add_config_file_argument(pencil_parser)

    catalog_parser = subparser.add_parser("catalog", help='Print the table of families.')
    catalog_parser.add_argument("--csv", type=str, default=None, metavar="FILEPATH",
                                help="Also write the table to a CSV file.")
    _add_config_file_argument(catalog_parser)

    fixtures_parser = subparser.add_parser("fixtures",
                                           help='Check the transcribed configuration lists against the enumeration.')
    fixtures_parser.add_argument("--fixture", type=str, action="append", default=None, metavar="FILEPATH",
                                 help="Fixture file; repeat for several. Defaults to every packaged fixture.")
    _add_config_file_argument(fixtures_parser)

    runtime_configuration = vars(parser.parse_args(argv))
    return runtime_configuration


def _emit(document):
    data_service.write_json(document, sys.stdout)


def _error_document(error):
    if isinstance(error, ParseError):
        return OrderedDict([("error", error.message), ("line", error.line), ("column", error.column)])
    return OrderedDict([("error", str(error)), ("line", None), ("column", None)])


def _classifier_config(cli_arguments, runtime_config):
    classifier_config = config.ClassifierConfigurationRepresentation(runtime_config)
    if cli_arguments.get("order") is not None:
        if cli_arguments["order"] < 2:
            raise ValueError("Invalid value for --order.\nExpected: integer of at least 2")
        classifier_config.order = cli_arguments["order"]
    return classifier_config


def _split_names(text):
    return tuple(name.strip() for name in text.split(',') if name.strip())


def _run_classify(cli_arguments, classifier_config):
    variables = _split_names(cli_arguments["variables"]) if cli_arguments["variables"] else None
    f = parse_polynomial(cli_arguments["germ"], variables)
    order = classifier_config.order
    details = OrderedDict([("variables", list(f.variables)), ("order", order)])

    if cli_arguments["point"] is not None:
        point = data_service.parse_point(cli_arguments["point"])
        weights = WeightedSpace.parse(cli_arguments["weights"]).weights if cli_arguments["weights"] else None
        found = classify_projective_point(f, point, weights, order)
        kind = found.type
        details["point"] = list(found.point)
        details["chart"] = f.variables[found.chart]
    elif cli_arguments["surface"]:
        kind = classify_surface_double_point(f, order)
        details["multiplicity"] = multiplicity(f)
    else:
        kind = classify_curve_germ(f)
        details["multiplicity"] = multiplicity(f)

    if cli_arguments["point"] is None and is_symmetric_germ(f):
        center = symmetric_center_verdict(kind)
        details["symmetric_center"] = center.verdict
        if center.quotient is not None:
            details["symmetric_quotient"] = center.quotient.label
    _emit(OrderedDict([("type", kind.label), ("milnor", kind.milnor), ("details", details)]))
    return EXIT_SUCCESS


def _run_verify(cli_arguments, runtime_config, classifier_config):
    spec = families.family_by_name(cli_arguments["family"])
    points = data_service.read_points_file(cli_arguments["points"]) if cli_arguments["points"] else None

    jobs = []
    for path in cli_arguments["input"]:
        polynomials = data_service.read_polynomial_file(path, spec.variables)
        print("[Verify] {}: family {}, {} equation(s)".format(path, spec.name, len(polynomials)), file=sys.stderr)
        jobs.append(core.Job(label=path, kind=spec.name, function=families.verify,
                             args=(spec.name, polynomials),
                             kwargs={"points": points,
                                     "order": classifier_config.order,
                                     "elimination_limit": classifier_config.elimination_limit}))

    runner = core.BatchRunner(jobs,
                              dask_config=config.DaskSchedulerConfigurationRepresentation(runtime_config),
                              output_config=config.OutputConfigurationRepresentation(runtime_config))
    records = runner.run()

    for record in records:
        print("[Verify] {}: {}".format(record.label, record.verdict), file=sys.stderr)
    if len(records) == 1:
        _emit(records[0].payload)
    else:
        _emit([record.to_dict() for record in records])

    verdicts = set(record.verdict for record in records)
    if core.ERROR in verdicts:
        return EXIT_INPUT_ERROR
    if families.FAIL in verdicts:
        return EXIT_FAIL
    return EXIT_SUCCESS


def _run_enumerate(cli_arguments):
    if cli_arguments["diagram"] is not None:
        diagram = data_service.read_diagram_file(cli_arguments["diagram"])
        generator = config_of(diagram)
        configurations = enumerate_configurations(diagram)
    else:
        alternatives = [ConfigName.parse(text) for text in cli_arguments["ade"].split('|')]
        generator = " | ".join(str(name) for name in alternatives)
        configurations = enumerate_union(alternatives)
    names = [str(c) for c in sorted_configs(configurations)]
    _emit(OrderedDict([("generator", str(generator)), ("count", len(names)), ("configurations", names)]))
    return EXIT_SUCCESS


def _run_pencil_check(cli_arguments):
    diagram = data_service.read_diagram_file(cli_arguments["diagram"])
    if cli_arguments["mult"] is not None:
        mult = data_service.parse_multiplicities(cli_arguments["mult"])
    else:
        mult = data_service.read_multiplicities(cli_arguments["diagram"])
        if mult is None:
            raise LogDPError("No multiplicities given and none stored in {}".format(cli_arguments["diagram"]))
    is_pencil = elliptic_pencil_check(diagram, mult)
    _emit(OrderedDict([("diagram", cli_arguments["diagram"]),
                       ("multiplicities", [[v, m] for v, m in mult.items()]),
                       ("elliptic_pencil", is_pencil)]))
    return EXIT_SUCCESS if is_pencil else EXIT_FAIL


def _run_catalog(cli_arguments):
    table = families.catalog_to_pandas()
    if cli_arguments["csv"] is not None:
        table.to_csv(cli_arguments["csv"], index=False)
        print("[Catalog] Family table written to {}".format(cli_arguments["csv"]), file=sys.stderr)
    _emit([OrderedDict((column, row[column]) for column in table.columns) for _, row in table.iterrows()])
    return EXIT_SUCCESS


def _run_fixtures(cli_arguments):
    checks = core.check_fixtures(cli_arguments["fixture"])
    for check in checks:
        print("[Fixtures] {} ({}): {}".format(check.fixture.name, check.fixture.mode,
                                             "pass" if check.passed else "fail"), file=sys.stderr)
    _emit([check.to_dict() for check in checks])
    return EXIT_SUCCESS if all(check.passed for check in checks) else EXIT_FAIL


def _main(argv=None):
    cli_arguments = get_cli_arguments(argv)

    logging.basicConfig(level=logging.DEBUG if cli_arguments["verbose"] else logging.WARNING,
                        stream=sys.stderr)

    command = cli_arguments["command"]
    if command == "config":
        output_config_location = cli_arguments["output_config"]
        overwrite_mode = cli_arguments["f"]
        config.generate_default_config_file(output_location=output_config_location,
                                            overwrite=overwrite_mode)
        return EXIT_SUCCESS

    try:
        # Get runtime config from specified location
        runtime_config = None
        if cli_arguments.get("config_file"):
            runtime_config = config.read_configuration(location=cli_arguments["config_file"])
        classifier_config = _classifier_config(cli_arguments, runtime_config)

        if command == "classify":
            return _run_classify(cli_arguments, classifier_config)
        elif command == "verify":
            return _run_verify(cli_arguments, runtime_config, classifier_config)
        elif command == "enumerate":
            return _run_enumerate(cli_arguments)
        elif command == "pencil-check":
            return _run_pencil_check(cli_arguments)
        elif command == "catalog":
            return _run_catalog(cli_arguments)
        elif command == "fixtures":
            return _run_fixtures(cli_arguments)
        else:
            print("Error: Unexpected command specified. Exiting...", file=sys.stderr)
            return EXIT_INPUT_ERROR
    except (LogDPError, ValueError) as e:
        _emit(_error_document(e))
        return EXIT_INPUT_ERROR
