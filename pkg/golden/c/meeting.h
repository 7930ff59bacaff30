// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_MEETING_H
#define KNOW_MEETING_H

#include <stdbool.h>
#include <stddef.h>

/* Meeting */
#define KNOW_MEETING_TYPE_IRI "https://know.dev/Meeting"

typedef struct Meeting {
    const char *id;
} Meeting;

#endif /* KNOW_MEETING_H */
