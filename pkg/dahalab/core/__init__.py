from ._hook import Hook, HookManager, HookParent, hooks
from ._plugin import Plugin, PluginManager, PluginParent
from ._protocol import ProtocolChecker, ProtocolIssue

__all__ = ['Hook', 'HookManager', 'HookParent', 'Plugin', 'PluginManager', 'PluginParent', 'ProtocolChecker', 'ProtocolIssue', 'hooks']
