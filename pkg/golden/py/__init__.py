# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

"""Generated SDK index and runtime type registry."""

from .airport import Airport
from .appointment import Appointment
from .birthday import Birthday
from .cafe import Cafe
from .event import Event
from .group import Group
from .holiday import Holiday
from .hospital import Hospital
from .hotel import Hotel
from .landmark import Landmark
from .meeting import Meeting
from .organization import Organization
from .party import Party
from .person import Person
from .place import Place
from .place_of_worship import PlaceOfWorship
from .restaurant import Restaurant

__all__ = [
    "Airport",
    "Appointment",
    "Birthday",
    "Cafe",
    "Event",
    "Group",
    "Holiday",
    "Hospital",
    "Hotel",
    "Landmark",
    "Meeting",
    "Organization",
    "Party",
    "Person",
    "Place",
    "PlaceOfWorship",
    "Restaurant",
]

TYPE_REGISTRY = {
    Airport.TYPE_IRI: Airport,
    Appointment.TYPE_IRI: Appointment,
    Birthday.TYPE_IRI: Birthday,
    Cafe.TYPE_IRI: Cafe,
    Event.TYPE_IRI: Event,
    Group.TYPE_IRI: Group,
    Holiday.TYPE_IRI: Holiday,
    Hospital.TYPE_IRI: Hospital,
    Hotel.TYPE_IRI: Hotel,
    Landmark.TYPE_IRI: Landmark,
    Meeting.TYPE_IRI: Meeting,
    Organization.TYPE_IRI: Organization,
    Party.TYPE_IRI: Party,
    Person.TYPE_IRI: Person,
    Place.TYPE_IRI: Place,
    PlaceOfWorship.TYPE_IRI: PlaceOfWorship,
    Restaurant.TYPE_IRI: Restaurant,
}


def decode_json(text):
    """Decode any instance document by dispatching on its type IRI."""
    import json as _json

    obj = _json.loads(text)
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValueError("expected an object with a 'type' member")
    cls = TYPE_REGISTRY.get(obj["type"])
    if cls is None:
        raise ValueError("unknown type IRI %r" % obj["type"])
    return cls.from_json_text(text)
