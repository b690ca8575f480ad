from .base_check import BaseCheck
from .verification_checks import CHECK_CLASSES, create_checks
from .verification_suite import VerificationSuite

__all__ = ['BaseCheck', 'CHECK_CLASSES', 'create_checks', 'VerificationSuite']
