import json
import time

import pytest

import dahalab
from dahalab import Check, CheckResult, Engine, Parameters, Status
from dahalab.algebra import CheckTimeout, NotEqual
from dahalab.plugins import BudgetPlugin, LogPlugin, ProgressPlugin, ReportPlugin


def passing(message='ok'):
    return lambda: CheckResult.of(True, message)


def failing():
    raise NotEqual('T1 T1 != 1')


def test_run():
    """Test that checks are run in order and collected in a report"""
    checks = [Check('a', passing()), Check('b', failing), Check('c', lambda: CheckResult(Status.SKIP, 'not applicable'))]
    engine = Engine(Parameters(suite='demo', n=2), checks, version='1.0')
    report = engine.run()

    assert report is engine.report
    assert report.suite == 'demo'
    assert report.config == {'suite': 'demo', 'n': 2}
    assert [(r.name, r.status) for r in report.records] == [('a', Status.PASS), ('b', Status.FAIL), ('c', Status.SKIP)]
    assert report.records[1].message == 'NotEqual'
    assert report.records[1].witness == 'T1 T1 != 1'
    assert report.status is Status.FAIL


def test_unexpected_errors_propagate():
    """Test that errors that are not library errors are not swallowed"""

    def broken():
        raise ZeroDivisionError

    engine = Engine(Parameters(suite='demo'), [Check('broken', broken)])
    with pytest.raises(ZeroDivisionError):
        engine.run()


def test_timeout_is_skip():
    """Test that checks exceeding their budget are skipped"""

    def slow():
        raise CheckTimeout('slow ran longer than 1s')

    report = Engine(Parameters(suite='demo'), [Check('slow', slow)]).run()
    assert report.records[0].status is Status.SKIP
    assert report.status is Status.SKIP


def test_volatile_config():
    """Test that volatile parameters are not echoed in the report"""
    params = Parameters(suite='demo', n=2, _jobs=1, _json_path='report.json')
    report = Engine(params, [Check('a', passing())]).run()
    assert report.config == {'suite': 'demo', 'n': 2}


def test_parameter_lookup():
    """Test that missing engine attributes are looked up on the parameters"""
    engine = Engine(Parameters(suite='demo', n=3), [], extra='value')
    assert engine.n == 3
    assert engine.extra == 'value'
    with pytest.raises(AttributeError):
        engine.missing


def test_protocol():
    """Test that an engine without the required parameters does not run"""
    engine = Engine(Parameters(n=2), [Check('a', passing())])
    with pytest.raises(TypeError, match='suite'):
        engine.run()

    engine = Engine(Parameters(suite='demo', _jobs='many'), [Check('a', passing())])
    with pytest.raises(TypeError, match='jobs'):
        engine.run()


def test_hooks():
    """Test the order and arguments of the engine hooks"""

    class Recorder(Engine):
        def __init__(self, *args, **kwargs):
            self.calls = []
            super().__init__(*args, **kwargs)

        @dahalab.hooks.engine_init
        def init(self):
            self.calls.append('init')

        @dahalab.hooks.engine_begin
        def begin(self, suite, total):
            self.calls.append(f'begin {suite} {total}')

        @dahalab.hooks.check_begin
        def check_begin(self, index, name):
            self.calls.append(f'check {index} {name}')

        @dahalab.hooks.check_end[1]
        def second_end(self, index, record):
            self.calls.append(f'second {record.status.value}')

        @dahalab.hooks.engine_end
        def end(self, report):
            self.calls.append(f'end {report.status.value}')

    engine = Recorder(Parameters(suite='demo'), [Check('a', passing()), Check('b', failing)])
    engine.run()
    assert engine.calls == ['init', 'begin demo 2', 'check 0 a', 'check 1 b', 'second FAIL', 'end FAIL']


def test_quit():
    """Test that quitting skips the remaining checks"""

    class Quitter(Engine):
        @dahalab.hooks.check_end[0]
        def stop(self, index, record):
            self.quit()

    engine = Quitter(Parameters(suite='demo'), [Check(name, passing()) for name in 'abc'])
    report = engine.run()
    assert engine.stopping
    assert [r.status for r in report.records] == [Status.PASS, Status.SKIP, Status.SKIP]
    assert report.records[2].message == 'interrupted'


def test_parallel():
    """Test that parallel runs report in suite order"""

    def sleeper(seconds, name):
        def fn():
            time.sleep(seconds)
            return CheckResult.of(True, name)

        return fn

    checks = [Check(f'c{i}', sleeper(0.05 * (4 - i), f'c{i}')) for i in range(4)]
    report = Engine(Parameters(suite='demo', _jobs=4), checks).run()
    assert [r.name for r in report.records] == ['c0', 'c1', 'c2', 'c3']
    assert [r.message for r in report.records] == ['c0', 'c1', 'c2', 'c3']
    assert report.passed


def test_report_plugin(tmp_path, capsys):
    """Test that the report plugin prints the text report and writes JSON"""

    class ReportEngine(Engine):
        plugins = [ReportPlugin()]

    params = Parameters(suite='demo', _json_path=str(tmp_path / 'out' / 'report.json'))
    report = ReportEngine(params, [Check('a', passing('fine'))]).run()

    assert '[PASS] a: fine' in capsys.readouterr().out
    data = json.loads((tmp_path / 'out' / 'report.json').read_text())
    assert data['status'] == 'PASS'
    assert data['records'][0]['message'] == 'fine'
    assert data['config'] == {'suite': 'demo'}
    assert report.digest() == dahalab.Report.read(tmp_path / 'out' / 'report.json').digest()


def test_report_plugin_quiet(capsys):
    """Test that the quiet flag silences the text report"""

    class ReportEngine(Engine):
        plugins = [ReportPlugin()]

    ReportEngine(Parameters(suite='demo', _quiet=True), [Check('a', passing())]).run()
    assert '[PASS]' not in capsys.readouterr().out


def test_progress_plugin(capsys):
    """Test that the progress plugin prints a line per check without a terminal"""

    class ProgressEngine(Engine):
        plugins = [ProgressPlugin()]

    engine = ProgressEngine(Parameters(suite='demo'), [Check('a', passing()), Check('b', failing)])
    engine.plugins['progressplugin'].tty = False
    engine.run()

    out = capsys.readouterr().out
    assert '[1/2] PASS a' in out
    assert '[2/2] FAIL b' in out


def test_log_plugin(tmp_path):
    """Test that the log plugin stores a log file and removes its handlers afterwards"""

    class LogEngine(Engine):
        plugins = [LogPlugin()]

    import logging

    before = list(logging.root.handlers)
    engine = LogEngine(Parameters(suite='demo', _log_file=str(tmp_path / 'run.log')), [Check('a', passing())])
    assert len(logging.root.handlers) == len(before) + 2
    engine.run()

    plugin = engine.plugins['logplugin']
    plugin.remove_handlers()
    assert logging.root.handlers == before
    assert 'PASS a' in (tmp_path / 'run.log').read_text()


def test_log_plugin_quiet():
    """Test that the quiet flag only lets warnings through to the console"""

    class LogEngine(Engine):
        plugins = [LogPlugin()]

    import logging

    engine = LogEngine(Parameters(suite='demo', _quiet=True), [Check('a', passing())])
    plugin = engine.plugins['logplugin']
    assert [h.level for h in plugin.handlers] == [logging.WARNING]
    plugin.remove_handlers()


def test_budget_plugin():
    """Test that checks running far beyond their budget are stopped and skipped"""

    class BudgetEngine(Engine):
        plugins = [BudgetPlugin()]

    def forever():
        while True:
            time.sleep(0.01)

    checks = [Check('forever', forever, budget=0.01), Check('a', passing(), budget=1.0)]
    report = BudgetEngine(Parameters(suite='demo', _budget_scale=10.0), checks).run()
    assert [r.status for r in report.records] == [Status.SKIP, Status.PASS]
    assert 'exceeded budget' in report.records[0].message


@pytest.mark.parametrize('scale, seconds', [(None, 5.0), (2.0, 1.0)])
def test_budget_plugin_scale(scale, seconds):
    """Test that the timer is armed at the budget times the scale, which defaults to ten"""

    class BudgetEngine(Engine):
        plugins = [BudgetPlugin()]

    extra = {} if scale is None else {'_budget_scale': scale}
    engine = BudgetEngine(Parameters(suite='demo', **extra), [Check('a', passing(), budget=0.5)])
    engine.run()
    assert engine.plugins['budgetplugin'].seconds == seconds
