// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_EVENT_H
#define KNOW_EVENT_H

#include <stdbool.h>
#include <stddef.h>

/* Event */
#define KNOW_EVENT_TYPE_IRI "https://know.dev/Event"

typedef struct Event {
    const char *id;
} Event;

#endif /* KNOW_EVENT_H */
