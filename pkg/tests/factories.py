import factory

from belyi.enums import CheckStatus
from belyi.models import CheckRecord
from belyi.schemas import DessinDocument


class DessinDocumentFactory(factory.Factory):
    """A star with n - 1 darts around the black vertex and dart 1 hanging off a white vertex."""

    class Meta:
        model = DessinDocument

    n = factory.Faker("pyint", min_value=3, max_value=12)
    sigma = factory.LazyAttribute(lambda o: [list(range(2, o.n + 1))])
    alpha = factory.LazyAttribute(lambda o: [[1, 2]])


class CheckRecordFactory(factory.Factory):
    class Meta:
        model = CheckRecord

    name = factory.Faker("sentence", nb_words=4)
    status = factory.Faker("random_element", elements=list(CheckStatus))
    details = factory.LazyFunction(dict)
    wall_time = factory.Faker("pyfloat", min_value=0, max_value=5)
