""" Batch execution of independent verifications and classifications, report
records with CSV export, and the fixture checks against the enumeration engine. """

import logging
import os
import sys
from collections import OrderedDict, namedtuple

import dask
import pandas as pd
from dask import delayed

from logdp import config, data_service
from logdp.dask_utils import DaskUtils
from logdp.dynkin import enumerate_union, sorted_configs
from logdp.errors import LogDPError

logger = logging.getLogger(__name__)

ERROR = 'error'

Job = namedtuple('Job', ['label', 'kind', 'function', 'args', 'kwargs'])


class ReportRecord:
    """ One labelled result of a batch: the verdict and the full report document. """

    def __init__(self, label, kind, verdict, payload):
        self.label = label
        self.kind = kind
        self.verdict = verdict
        self.payload = payload

    def to_dict(self):
        return OrderedDict([("label", self.label),
                            ("kind", self.kind),
                            ("verdict", self.verdict),
                            ("payload", self.payload)])

    def to_pandas(self):
        data = self.to_dict()
        data["payload"] = data_service.to_json_text(self.payload).replace('\n', ' ')
        df = pd.DataFrame(data, index=[1])
        df.index.name = '#'
        return df

    def to_csv(self, filename, delimiter='|'):
        filename = str(filename)

        psv_header = not os.path.isfile(filename)

        # Open the output file in append mode
        with open(filename, "a") as psv_file:
            pd_results = self.to_pandas()
            pd_results.to_csv(psv_file, sep=delimiter, header=psv_header, index=False)

    def __repr__(self):
        return "ReportRecord({!r}, {}, {})".format(self.label, self.kind, self.verdict)


def _execute(job):
    """ Runs one job; input errors become an error record instead of aborting the batch. """
    try:
        report = job.function(*job.args, **job.kwargs)
    except LogDPError as e:
        payload = OrderedDict([("error", str(e)),
                               ("line", getattr(e, 'line', None)),
                               ("column", getattr(e, 'column', None))])
        return ReportRecord(job.label, job.kind, ERROR, payload)
    return ReportRecord(job.label, job.kind, report.verdict, report.to_dict())


class BatchRunner:
    """ Fans independent jobs out through dask and collects records in input order. """

    def __init__(self, jobs, dask_config=None, output_config=None):
        """
        :param jobs: jobs to run
        :type jobs: list of Job
        :type dask_config: config.DaskSchedulerConfigurationRepresentation
        :type output_config: config.OutputConfigurationRepresentation
        """
        self.jobs = list(jobs)
        self.dask_config = dask_config if dask_config is not None else config.DaskSchedulerConfigurationRepresentation()
        self.output_config = output_config if output_config is not None else config.OutputConfigurationRepresentation()
        self.dask_utils = DaskUtils()

    def run(self):
        if not self.jobs:
            return []

        if self.dask_config.enabled:
            self.dask_utils.connect_to_scheduler(address=self.dask_config.scheduler_address,
                                                 port=self.dask_config.scheduler_port)
        try:
            tasks = [delayed(_execute)(job, dask_key_name='job-{}'.format(i)) for i, job in enumerate(self.jobs)]
            if self.dask_utils.client is not None:
                records = list(dask.compute(*tasks))
            else:
                records = list(dask.compute(*tasks, scheduler='threads'))
        finally:
            self.dask_utils.close()

        self._record(records)
        return records

    def _record(self, records):
        if self.output_config.output_csv_enabled:
            for record in records:
                record.to_csv(filename=self.output_config.output_csv_filename,
                              delimiter=self.output_config.output_csv_delimiter)


class FixtureCheck:
    """ Outcome of comparing a fixture list with the enumeration of its generator. """

    def __init__(self, fixture, passed, missing, omitted):
        self.fixture = fixture
        self.passed = passed
        self.missing = missing  # listed but not produced by the enumeration
        self.omitted = omitted  # produced by the enumeration but not listed

    def to_dict(self):
        return OrderedDict([("name", self.fixture.name),
                            ("mode", self.fixture.mode),
                            ("generator", self.fixture.generator),
                            ("passed", self.passed),
                            ("entries", len(self.fixture.entries)),
                            ("missing", [str(c) for c in sorted_configs(self.missing)]),
                            ("omitted", [str(c) for c in sorted_configs(self.omitted)])])


def check_fixture(fixture):
    """
    Exact fixtures must equal the enumeration of their generator, subset
    fixtures must be contained in it. A generator may list alternatives
    separated by '|', whose enumerations are united. A fixture without
    entries passes.
    :type fixture: data_service.Fixture
    :rtype: FixtureCheck
    """
    if not fixture.entries:
        return FixtureCheck(fixture, True, set(), set())

    listed = set(fixture.entries)
    if len(listed) != len(fixture.entries):
        logger.warning("Fixture %s lists a configuration twice", fixture.name)
    produced = enumerate_union(fixture.generator)
    missing = listed - produced
    omitted = produced - listed

    if fixture.mode == data_service.SUBSET:
        passed = not missing
        if passed and omitted:
            print("[Fixtures] {}: {} enumerated configuration(s) not listed: {}".format(
                fixture.name, len(omitted), "; ".join(str(c) for c in sorted_configs(omitted))), file=sys.stderr)
    else:
        passed = not missing and not omitted
    return FixtureCheck(fixture, passed, missing, omitted)


def check_fixtures(paths=None):
    """ Checks the given fixture files, or every packaged fixture when none are given. """
    if paths is None:
        paths = data_service.list_fixture_files()
    return [check_fixture(data_service.read_fixture(path)) for path in paths]
