import logging
from typing import Any, Dict, List

from ..checks import CHECK_CLASSES, VerificationSuite, create_checks


class CheckFactory:
    """校验套件工厂类"""

    def __init__(self, config: Dict[str, Any]):
        self.config = config
        self.logger = logging.getLogger('check_factory')

    def _checks_config(self) -> Dict[str, Any]:
        return self.config.get('checks', {}) or {}

    def _enabled_checks(self) -> List[str]:
        enabled = self._checks_config().get('enabled')
        return list(enabled) if enabled else sorted(CHECK_CLASSES)

    def _get_check_dependencies(self) -> Dict[str, List[str]]:
        """获取校验项依赖关系"""
        defaults = {
            'free_generation': ['series_identities'],
            'pairing': ['series_identities'],
        }
        configured = self._checks_config().get('dependencies') or {}
        defaults.update({name: list(deps or []) for name, deps in configured.items()})
        return defaults

    def create_suite(self, run_config: Dict[str, Any]) -> VerificationSuite:
        """创建校验套件"""
        try:
            checks = create_checks(run_config, self._get_check_dependencies(), self._enabled_checks())
            suite = VerificationSuite(name="verify", config=run_config, checks=checks,
                                      workers=int(self._checks_config().get('workers', 4)))
            self.logger.info(f"Created verification suite with {len(checks)} checks")
            return suite
        except Exception as e:
            self.logger.error(f"Failed to create verification suite: {e}")
            raise

    def validate_configuration(self) -> bool:
        """验证配置"""
        try:
            unknown = [name for name in self._enabled_checks() if name not in CHECK_CLASSES]
            if unknown:
                self.logger.error(f"Unknown checks configured: {unknown}")
                return False

            for name, deps in self._get_check_dependencies().items():
                missing = [d for d in deps if d not in CHECK_CLASSES]
                if name not in CHECK_CLASSES or missing:
                    self.logger.error(f"Invalid dependency entry for {name}: {deps}")
                    return False

            series = self.config.get('series', {}) or {}
            if int(series.get('truncation', 10)) < 3:
                self.logger.error("Series truncation must be at least 3 for the free generation check")
                return False

            self.logger.info("Configuration validation passed")
            return True

        except Exception as e:
            self.logger.error(f"Error validating configuration: {e}")
            return False

    def get_check_info(self) -> Dict[str, Any]:
        """获取校验项信息"""
        dependencies = self._get_check_dependencies()
        return {
            name: {
                'class': CHECK_CLASSES[name].__name__,
                'dependencies': dependencies.get(name, []),
                'description': (CHECK_CLASSES[name].__doc__ or '').strip(),
            }
            for name in self._enabled_checks()
        }
